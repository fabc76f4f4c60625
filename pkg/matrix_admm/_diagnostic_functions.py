import numpy as np
from rounding import leadingPartition

def lagrangianMatrix(state, cost, rho=None):
    rho = state.rho if rho is None else rho
    gapXY = state.X - state.Y
    gapZ = state.Z - state.X @ state.Y.T
    return float(np.sum(cost.C * state.Z.T)
                 + np.sum(state.lambda2 * gapXY)
                 + np.sum(state.lambda1 * gapZ)
                 + 0.5 * rho * np.sum(gapXY * gapXY)
                 + 0.5 * rho * np.sum(gapZ * gapZ))

def feasibilityResiduals(state):
    return (float(np.linalg.norm(state.X - state.Y)),
            float(np.linalg.norm(state.Z - state.X @ state.Y.T)))

def zxStationarity(state, cost, nu):
    """Norms of the three optimality conditions of the (Z, X) subproblem."""
    gapZ = state.Z - state.X @ state.Y.T
    zCondition = cost.C - np.diag(nu) + state.lambda1 + state.rho * gapZ
    xCondition = state.lambda2 - state.lambda1 @ state.Y - state.rho * gapZ @ state.Y + state.rho * (state.X - state.Y)
    diagCondition = np.diag(state.Z) - 1.0
    return (float(np.linalg.norm(zCondition)),
            float(np.linalg.norm(xCondition)),
            float(np.linalg.norm(diagCondition)))

def _yStepResiduals(state, Y):
    return (state.Z - state.X @ Y.T + state.lambda1 / state.rho,
            state.X - Y + state.lambda2 / state.rho)

def yStepObjective(state, Y):
    first, second = _yStepResiduals(state, Y)
    return float(np.sum(first * first) + np.sum(second * second))

def yStepGradient(state, Y):
    first, second = _yStepResiduals(state, Y)
    return -2.0 * first.T @ state.X - 2.0 * second

def roundedIterate(state):
    return leadingPartition(state.X)
