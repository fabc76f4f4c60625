import numpy as np
from graph_model import Partition
from . import OracleCapError, oracleCap

defaultBlockBits = 16

def bruteForce(cost, blockBits=defaultBlockBits):
    """Exact minimizer of x^T C x over {-1, 1}^n with x_1 fixed to +1.

    Candidates are scanned in lexicographic order (-1 before +1) and the
    first minimum is kept, so ties resolve to the lexicographically smallest
    partition with x_1 = +1."""
    n = cost.n
    if n > oracleCap:
        raise OracleCapError('brute force is capped at n = %d, got n = %d' % (oracleCap, n))
    C = cost.C
    free = n - 1
    # bit (free - 1 - j) of the counter is x_{j+2}, so counting up walks lexicographic order
    shifts = np.arange(free - 1, -1, -1, dtype=np.int64)
    total = 1 << free
    step = 1 << min(blockBits, free)
    bestValue = float('inf')
    best = None
    for start in range(0, total, step):
        counters = np.arange(start, min(start + step, total), dtype=np.int64)
        block = np.ones((counters.size, n))
        if free:
            block[:, 1:] = ((counters[:, None] >> shifts[None, :]) & 1) * 2.0 - 1.0
        values = np.sum((block @ C) * block, axis=1)
        t = int(np.argmin(values))
        if values[t] < bestValue:
            bestValue = float(values[t])
            best = block[t].copy()
    return Partition(best), bestValue

def randomBaseline(cost, draws=1000, seed=0):
    """Best of `draws` uniformly random sign vectors."""
    if draws < 1:
        raise ValueError('draws must be >= 1, got %s' % draws)
    rng = np.random.default_rng(seed)
    candidates = rng.choice([-1.0, 1.0], size=(draws, cost.n))
    values = np.sum((candidates @ cost.C) * candidates, axis=1)
    t = int(np.argmin(values))
    return Partition(candidates[t]), float(values[t])
