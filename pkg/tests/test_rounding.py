import numpy as np
import pytest
from conftest import randomSymmetric
from graph_model import CostMatrix, Partition, buildMaxcutCost, objective
from instances import bruteForce
from rounding import signRound, factorFromSymmetric, factorFromRect, scanCandidates, randomizedRound, leadingPartition

def test_signRound():
    assert signRound([0.3, -2.0, 0.0]) == Partition([1, -1, 1])
    assert signRound(np.array([[-1e-300], [5.0]])).tolist() == [-1, 1]

def test_factorFromSymmetricRankOne():
    x = np.array([1.0, -1.0, 1.0, 1.0])
    factor = factorFromSymmetric(np.outer(x, x))
    assert factor.origin == 'eigen'
    assert factor.magnitudes[0] == pytest.approx(4.0)
    assert np.allclose(factor.magnitudes[1:], 0.0, atol=1e-12)
    assert signRound(factor.F[:, 0]).canonical() == Partition(x)

def test_factorFromSymmetricReconstructsPsd(rng):
    R = rng.standard_normal((6, 3))
    Z = R @ R.T
    factor = factorFromSymmetric(Z)
    assert np.all(np.diff(factor.magnitudes) <= 1e-12)
    assert np.allclose(factor.F @ factor.F.T, Z, atol=1e-10)

def test_factorFromRect(rng):
    X = rng.standard_normal((8, 3))
    factor = factorFromRect(X)
    assert factor.origin == 'svd'
    assert factor.width == 3
    assert np.all(np.diff(factor.magnitudes) <= 0)
    # F F^T = U S U^T = (X X^T)^(1/2)
    U, s, _ = np.linalg.svd(X, full_matrices=False)
    assert np.allclose(factor.F @ factor.F.T, (U * s) @ U.T, atol=1e-10)

def test_scanCandidatesShapeAndSeed(rng):
    factor = factorFromRect(rng.standard_normal((7, 4)))
    blocks = list(scanCandidates(factor, trials=5, seed=3))
    assert [k for k, _ in blocks] == [1, 2, 3, 4]
    assert all(block.shape == (7, 5) and np.all(np.abs(block) == 1.0) for _, block in blocks)
    again = list(scanCandidates(factor, trials=5, seed=3))
    assert all(np.array_equal(a, b) for (_, a), (_, b) in zip(blocks, again))
    with pytest.raises(ValueError):
        list(scanCandidates(factor, trials=0))

def test_randomizedRoundRankOneFactorRecoversSigns():
    x = np.array([1.0, -1.0, -1.0, 1.0, 1.0])
    factor = factorFromRect(x[:, None])
    cost = CostMatrix(-np.outer(x, x))
    best = randomizedRound(factor, cost, trials=3, seed=0)
    assert best.canonical() == Partition(x)
    assert objective(cost, best) == -25.0

def test_randomizedRoundNeverWorseThanCandidates(rng):
    cost = CostMatrix(randomSymmetric(9, seed=4))
    factor = factorFromRect(rng.standard_normal((9, 4)))
    best = randomizedRound(factor, cost, trials=6, seed=1)
    values = [objective(cost, Partition(block[:, t]))
              for _, block in scanCandidates(factor, trials=6, seed=1) for t in range(6)]
    assert objective(cost, best) == pytest.approx(min(values))
    _, optimum = bruteForce(cost)
    assert objective(cost, best) >= optimum - 1e-12

def test_randomizedRoundOnOptimalFactor(triangle):
    # The SDP optimum for the triangle spreads the nodes 120 degrees apart
    angles = np.array([0.0, 2.0, 4.0]) * np.pi / 3.0
    factor = factorFromRect(np.column_stack([np.cos(angles), np.sin(angles)]))
    cost = buildMaxcutCost(triangle)
    best = randomizedRound(factor, cost, trials=10, seed=0)
    assert -objective(cost, best) == pytest.approx(2.0)

def test_leadingPartition(rng):
    column = np.array([0.5, -0.2, 0.0])
    assert leadingPartition(column[:, None]) == Partition([1, -1, 1])
    x = np.array([1.0, -1.0, 1.0, -1.0])
    X = np.outer(x, [3.0, 0.0]) + 1e-3 * rng.standard_normal((4, 2))
    assert leadingPartition(X).canonical() == Partition(x)
