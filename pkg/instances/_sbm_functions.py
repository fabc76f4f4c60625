import numpy as np
from graph_model import Graph, Partition

def sbmGenerate(spec):
    """Two planted communities: nodes 1..m are +1, the rest -1; unit edge weights."""
    rng = np.random.default_rng(spec.seed)
    labels = np.where(np.arange(spec.n) < spec.m, 1.0, -1.0)
    rows, cols = np.triu_indices(spec.n, k=1)
    probability = np.where(labels[rows] == labels[cols], spec.p, spec.q)
    present = rng.random(rows.size) < probability
    edges = zip((rows[present] + 1).tolist(), (cols[present] + 1).tolist(), [1.0] * int(present.sum()))
    return Graph(spec.n, edges), Partition(labels)
