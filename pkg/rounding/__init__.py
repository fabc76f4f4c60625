import numpy as np
import scipy.linalg
from graph_model import Partition
from numerics import symEigen

defaultTrials = 10
factorOrigins = ['eigen', 'svd']

class Factor:
    """n x k factor whose columns are ordered by decreasing spectral magnitude."""
    def __init__(self, F, origin, magnitudes):
        assert origin in factorOrigins
        self.F = F
        self.origin = origin
        self.magnitudes = magnitudes

    @property
    def width(self):
        return self.F.shape[1]

def _signs(values):
    return np.where(values >= 0, 1.0, -1.0)

def signRound(x):
    return Partition(_signs(np.asarray(x, dtype=float).ravel()))

def factorFromSymmetric(Z):
    eigen = symEigen(Z)
    # Indefinite Z can show up mid-run; |lambda| keeps the factor real
    order = np.argsort(-np.abs(eigen.lam), kind='stable')
    magnitudes = np.abs(eigen.lam[order])
    return Factor(eigen.U[:, order] * np.sqrt(magnitudes), 'eigen', magnitudes)

def factorFromRect(X):
    U, s, _ = scipy.linalg.svd(np.asarray(X, dtype=float), full_matrices=False)
    return Factor(U * np.sqrt(s), 'svd', s)

def scanCandidates(factor, trials=defaultTrials, seed=0):
    """Yield (k, candidates) with candidates an n x trials block of sign(F_k z_t)."""
    if trials < 1:
        raise ValueError('trials must be >= 1, got %s' % trials)
    rng = np.random.default_rng(seed)
    for k in range(1, factor.width + 1):
        z = rng.standard_normal((k, trials))
        yield k, _signs(factor.F[:, :k] @ z)

def randomizedRound(factor, cost, trials=defaultTrials, seed=0):
    best = None
    bestValue = float('inf')
    for _, candidates in scanCandidates(factor, trials, seed):
        values = np.sum(candidates * (cost.C @ candidates), axis=0)
        t = int(np.argmin(values))
        if values[t] < bestValue:
            bestValue = float(values[t])
            best = candidates[:, t]
    return Partition(best)

def leadingPartition(X):
    X = np.asarray(X, dtype=float)
    if X.ndim == 1 or X.shape[1] == 1:
        return signRound(X)
    return signRound(factorFromRect(X).F[:, 0])
