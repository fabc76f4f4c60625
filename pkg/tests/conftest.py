import numpy as np
import pytest
from graph_model import Graph, CostMatrix, buildMaxcutCost

def randomSymmetric(n, seed=0, scale=1.0):
    rng = np.random.default_rng(seed)
    B = rng.standard_normal((n, n))
    return scale * (B + B.T) / 2.0

def randomGraph(n, density=0.5, seed=0, weighted=False):
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                edges.append((i, j, float(rng.integers(1, 5)) if weighted else 1.0))
    return Graph(n, edges)

class LogCollector:
    def __init__(self):
        self.lines = []

    def __call__(self, value, end='\n'):
        self.lines.append(value)

    def warnings(self):
        return [line for line in self.lines if line.startswith('WARNING:')]

@pytest.fixture
def rng():
    return np.random.default_rng(12345)

@pytest.fixture
def k2():
    return Graph(2, [(1, 2, 1.0)])

@pytest.fixture
def triangle():
    return Graph(3, [(1, 2, 1.0), (2, 3, 1.0), (1, 3, 1.0)])

@pytest.fixture
def smallMaxcut():
    graph = randomGraph(10, density=0.5, seed=3, weighted=True)
    return graph, buildMaxcutCost(graph)

@pytest.fixture
def randomCost():
    return CostMatrix(randomSymmetric(12, seed=7))

@pytest.fixture
def logCollector():
    return LogCollector()

@pytest.fixture
def rudyFile(tmp_path):
    def write(text, name='graph.rudy'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
