import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

rankModes = ['one', 'full']
defaultRho0 = 1.0

class ScheduleError(ValueError):
    pass

class MatrixConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rMode: Literal['one', 'full'] = 'full'
    # None: defaultRho0
    rho0: Optional[float] = None
    alpha: float = 1.1
    eps: float = 1e-5
    maxIter: int = 500
    seed: int = 0
    rhoCap: float = 1e10
    # Dual norms beyond this multiple of their starting value trip the monitor
    dualGrowthLimit: float = 1e6

    @field_validator('rho0')
    @classmethod
    def positiveRho0(cls, value):
        if value is not None and not value > 0:
            raise ValueError('rho0 must be > 0, got %s' % value)
        return value

    @field_validator('alpha', 'eps', 'rhoCap', 'dualGrowthLimit')
    @classmethod
    def strictlyPositive(cls, value):
        if not value > 0:
            raise ValueError('value must be > 0, got %s' % value)
        return value

    @field_validator('maxIter')
    @classmethod
    def positiveIterations(cls, value):
        if value < 1:
            raise ValueError('maxIter must be a positive integer, got %s' % value)
        return value

    @field_validator('seed')
    @classmethod
    def sixtyFourBitSeed(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError('seed must fit in 64 unsigned bits, got %s' % value)
        return value

def rankFor(n, rMode):
    if rMode == 'one':
        return 1
    if rMode != 'full':
        raise ValueError('Unknown rank mode: %s' % rMode)
    r = math.isqrt(2 * n)
    if r * r < 2 * n:
        r += 1
    assert r * (r + 1) // 2 > n
    return r

@dataclass(frozen=True, eq=False)
class MatrixState:
    Z: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    lambda1: np.ndarray
    lambda2: np.ndarray
    rho: float
    k: int = 0

@dataclass(frozen=True, eq=False)
class KKTWork:
    nu: np.ndarray
    D: np.ndarray
    G: np.ndarray
    B: np.ndarray

# pylint: disable=C0413
from ._update_functions import initialPenalty, initMatrix, updateY, kktWork, updateZX, updateDualsMatrix
from ._diagnostic_functions import lagrangianMatrix, feasibilityResiduals, zxStationarity, yStepObjective, yStepGradient, roundedIterate
from ._solve_functions import solveMatrix
