import numpy as np
from rounding import signRound
from . import KKTReport

def lagrangianVector(state, cost, rho=None):
    rho = state.rho if rho is None else rho
    gap = state.x - state.y
    return float(state.x @ cost.C @ state.x + state.mu @ gap + 0.5 * rho * (gap @ gap))

def dualIdentityResidual(state, cost):
    return float(np.linalg.norm(2.0 * cost.C @ state.x + state.mu))

def kktReportVector(state, cost):
    signs = signRound(state.x).x
    minMuX = float(np.min(state.mu * signs))
    return KKTReport(minMuX=minMuX,
                     signCondition=minMuX >= -state.rho,
                     stationarity=dualIdentityResidual(state, cost),
                     primalResidual=float(np.linalg.norm(state.x - state.y)))

def roundedIterate(state):
    return signRound(state.x)
