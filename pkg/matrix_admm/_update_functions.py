from dataclasses import replace

import numpy as np
from numerics import smallSpdSolve
from . import MatrixState, KKTWork, rankFor, defaultRho0

def initialPenalty(cfg):
    return defaultRho0 if cfg.rho0 is None else float(cfg.rho0)

def initMatrix(cost, cfg, rho0=None):
    rng = np.random.default_rng(cfg.seed)
    n = cost.n
    r = rankFor(n, cfg.rMode)
    Z = rng.standard_normal((n, n))
    X = rng.standard_normal((n, r))
    lambda1 = rng.standard_normal((n, n))
    lambda2 = rng.standard_normal((n, r))
    rho = initialPenalty(cfg) if rho0 is None else float(rho0)
    # Y starts equal to X so the X = Y constraint holds at k = 0
    return MatrixState(Z=Z, X=X, Y=X.copy(), lambda1=lambda1, lambda2=lambda2, rho=rho, k=0)

def updateY(state):
    X = state.X
    S = np.eye(X.shape[1]) + X.T @ X
    M = (state.lambda1.T @ X + state.lambda2) / state.rho + state.Z.T @ X + X
    # Y S = M with S symmetric, so solve S Y^T = M^T
    return replace(state, Y=smallSpdSolve(S, M.T).T)

def kktWork(state, cost):
    Y = state.Y
    rho = state.rho
    shifted = cost.C + state.lambda1
    D = (state.lambda1 @ Y - state.lambda2) / rho + Y
    G = 1.0 + np.sum(Y * Y, axis=1)
    # diag((C + L1)(I + YY^T)) without forming the n x n product
    diagTerm = np.diag(shifted) + np.sum((shifted @ Y) * Y, axis=1)
    nu = (rho * (1.0 - np.sum(D * Y, axis=1)) + diagTerm) / G
    B = -(shifted - np.diag(nu)) / rho
    return KKTWork(nu=nu, D=D, G=G, B=B)

def updateZX(state, cost, work=None):
    if work is None:
        work = kktWork(state, cost)
    X = work.B @ state.Y + work.D
    Z = X @ state.Y.T + work.B
    return replace(state, Z=Z, X=X)

def updateDualsMatrix(state, cfg):
    rho = state.rho
    lambda1 = state.lambda1 + rho * (state.Z - state.X @ state.Y.T)
    lambda2 = state.lambda2 + rho * (state.X - state.Y)
    return replace(state, lambda1=lambda1, lambda2=lambda2, rho=min(cfg.alpha * rho, cfg.rhoCap), k=state.k + 1)
