import numpy as np

costKinds = ['maxcut', 'community', 'custom']
defaultPixelCap = 4096

class DimensionError(ValueError):
    pass

class PixelCapError(ValueError):
    pass

def _frozen(array):
    array.setflags(write=False)
    return array

class Graph:
    """Weighted undirected graph on nodes 1..n.

    Edges are stored as sorted (i, j, w) tuples with i < j; duplicate pairs are
    summed into one weight. Weights must be strictly positive unless
    allowNonpositive is set (signed DIMACS instances)."""
    def __init__(self, n, edges=(), allowNonpositive=False):
        if int(n) != n or n < 1:
            raise ValueError('Graph needs a positive integer node count, got: %s' % n)
        self.n = int(n)
        self.allowNonpositive = allowNonpositive
        weights = {}
        for edge in edges:
            i, j, w = int(edge[0]), int(edge[1]), float(edge[2])
            if i == j:
                raise ValueError('Self-loops are not allowed: (%d, %d)' % (i, j))
            if i > j:
                i, j = j, i
            if i < 1 or j > self.n:
                raise ValueError('Edge (%d, %d) is out of range for n = %d' % (i, j, self.n))
            if not allowNonpositive and w <= 0:
                raise ValueError('Edge (%d, %d) has non-positive weight %g' % (i, j, w))
            weights[(i, j)] = weights.get((i, j), 0.0) + w
        self.edges = tuple((i, j, w) for (i, j), w in sorted(weights.items()))
        self._adjacency = None

    @property
    def numEdges(self):
        return len(self.edges)

    def adjacency(self):
        if self._adjacency is None:
            A = np.zeros((self.n, self.n))
            if self.edges:
                rows = np.array([e[0] for e in self.edges]) - 1
                cols = np.array([e[1] for e in self.edges]) - 1
                ws = np.array([e[2] for e in self.edges])
                A[rows, cols] = ws
                A[cols, rows] = ws
            self._adjacency = _frozen(A)
        return self._adjacency

    def totalWeight(self):
        return float(sum(e[2] for e in self.edges))

class CostMatrix:
    def __init__(self, C, kind='custom'):
        C = np.array(C, dtype=float)
        if C.ndim != 2 or C.shape[0] != C.shape[1]:
            raise DimensionError('Cost matrix must be square, got shape %s' % (C.shape,))
        if kind not in costKinds:
            raise ValueError('Unknown cost kind: %s' % kind)
        self.C = _frozen(C)
        self.kind = kind
        # (L1, LH), filled in by numerics.spectralConstants
        self.spectralMeta = None

    @property
    def n(self):
        return self.C.shape[0]

class Partition:
    def __init__(self, x):
        x = np.array(x, dtype=float).ravel()
        if x.size == 0 or not np.all((x == 1.0) | (x == -1.0)):
            raise ValueError('Partition entries must all be exactly +1 or -1')
        self.x = _frozen(x)

    def __len__(self):
        return self.x.size

    def __eq__(self, other):
        return isinstance(other, Partition) and np.array_equal(self.x, other.x)

    def __hash__(self):
        return hash(self.x.tobytes())

    def __repr__(self):
        return 'Partition(%s)' % ''.join('+' if v > 0 else '-' for v in self.x)

    def flipped(self):
        return Partition(-self.x)

    def canonical(self):
        # Labels only matter up to a global flip; fix the first entry to +1
        return self if self.x[0] > 0 else self.flipped()

    def tolist(self):
        return [int(v) for v in self.x]

# pylint: disable=C0413
from ._cost_functions import buildMaxcutCost, buildCommunityCost, buildImageCost
from ._metric_functions import objective, cutValue, recoveryRate, recoveryRounds
