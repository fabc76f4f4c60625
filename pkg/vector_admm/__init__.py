import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

class PenaltyConditionError(ValueError):
    pass

smallRho0 = 0.1

class VectorConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    # None: smallRho0, or descentPenalty when enforceTheorem1 is set
    rho0: Optional[float] = None
    alpha: float = 1.05
    eps: float = 1e-6
    maxIter: int = 2000
    seed: int = 0
    rhoCap: float = 1e8
    enforceTheorem1: bool = False
    schedule: Literal['geometric', 'constant'] = 'geometric'

    @field_validator('rho0')
    @classmethod
    def positiveRho0(cls, value):
        if value is not None and not value > 0:
            raise ValueError('rho0 must be > 0, got %s' % value)
        return value

    @field_validator('alpha')
    @classmethod
    def growthAtLeastOne(cls, value):
        if not value >= 1:
            raise ValueError('alpha must be >= 1, got %s' % value)
        return value

    @field_validator('eps', 'rhoCap')
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

    @property
    def growth(self):
        return 1.0 if self.schedule == 'constant' else self.alpha

@dataclass(frozen=True, eq=False)
class VectorState:
    x: np.ndarray
    y: np.ndarray
    mu: np.ndarray
    rho: float
    k: int = 0

@dataclass(frozen=True)
class KKTReport:
    minMuX: float
    signCondition: bool
    stationarity: float
    primalResidual: float

def penaltyFloor(L1, LH, alpha):
    """Positive root of rho^2 - LH rho - (alpha + 1) L1^2 = 0."""
    return 0.5 * (LH + math.sqrt(LH * LH + 4.0 * (alpha + 1.0) * L1 * L1))

def descentPenalty(L1, LH, alpha):
    return max(1.1 * penaltyFloor(L1, LH, alpha), 1.0)

def theorem1Violations(rho, L1, LH, alpha):
    failures = []
    if not rho * rho - LH * rho - (alpha + 1.0) * L1 * L1 > 0:
        failures.append('rho^2 - LH*rho - (alpha+1)*L1^2 = %g is not > 0' % (rho * rho - LH * rho - (alpha + 1.0) * L1 * L1))
    if not rho > LH:
        failures.append('rho = %g is not > LH = %g' % (rho, LH))
    if not rho > L1:
        failures.append('rho = %g is not > L1 = %g' % (rho, L1))
    return failures

# pylint: disable=C0413
from .runTrace import RunTrace
from ._update_functions import initialPenalty, initVector, updateY, updateX, updateDual
from ._diagnostic_functions import lagrangianVector, kktReportVector, dualIdentityResidual, roundedIterate
from ._solve_functions import solveVector
