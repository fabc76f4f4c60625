import numpy as np
from . import Partition, DimensionError

# Table-style "1.00": anything that rounds to 1 at two decimals
fullRecoveryThreshold = 0.995

def _asVector(p):
    return p.x if isinstance(p, Partition) else np.asarray(p, dtype=float).ravel()

def objective(cost, p):
    x = _asVector(p)
    if x.size != cost.n:
        raise DimensionError('Partition has %d entries but the cost matrix is %dx%d' % (x.size, cost.n, cost.n))
    return float(x @ cost.C @ x)

def cutValue(graph, p):
    x = _asVector(p)
    if x.size != graph.n:
        raise DimensionError('Partition has %d entries but the graph has %d nodes' % (x.size, graph.n))
    total = 0.0
    for i, j, w in graph.edges:
        if x[i - 1] != x[j - 1]:
            total += w
    return total

def recoveryRate(p, truth):
    x = _asVector(p)
    t = _asVector(truth)
    if x.size != t.size:
        raise DimensionError('Cannot compare partitions of length %d and %d' % (x.size, t.size))
    agreement = float(np.mean(x == t))
    return max(agreement, 1.0 - agreement)

def recoveryRounds(rate):
    return bool(rate >= fullRecoveryThreshold)
