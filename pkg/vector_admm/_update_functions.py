from dataclasses import replace

import numpy as np
from numerics import shiftedSolve, spectralConstants
from . import VectorState, descentPenalty, smallRho0

def initialPenalty(cost, cfg):
    if cfg.rho0 is not None:
        return float(cfg.rho0)
    if not cfg.enforceTheorem1:
        return smallRho0
    L1, LH = spectralConstants(cost)
    return descentPenalty(L1, LH, cfg.growth)

def initVector(cost, cfg, rho0=None):
    rng = np.random.default_rng(cfg.seed)
    n = cost.n
    x = rng.standard_normal(n)
    y = rng.standard_normal(n)
    mu = rng.standard_normal(n)
    rho = initialPenalty(cost, cfg) if rho0 is None else float(rho0)
    return VectorState(x=x, y=y, mu=mu, rho=rho, k=0)

def updateY(state):
    # Projection of x + mu / rho onto {-1, 1}^n; sign(0) = +1
    shifted = state.x + state.mu / state.rho
    return replace(state, y=np.where(shifted >= 0, 1.0, -1.0))

def updateX(state, cost, eigen):
    # 2Cx + mu + rho (x - y) = 0
    rhs = state.rho * state.y - state.mu
    return replace(state, x=shiftedSolve(eigen, state.rho, rhs))

def updateDual(state, cfg):
    mu = state.mu + state.rho * (state.x - state.y)
    rho = min(cfg.growth * state.rho, cfg.rhoCap)
    return replace(state, mu=mu, rho=rho, k=state.k + 1)
