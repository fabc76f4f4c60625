import numpy as np
import pytest
from conftest import randomSymmetric
from graph_model import CostMatrix
from numerics import NumericsError, symEigen, shiftedSolve, smallSpdSolve, spectralConstants

def test_symEigenReconstructs():
    M = randomSymmetric(15, seed=1)
    eigen = symEigen(M)
    assert np.all(np.diff(eigen.lam) >= 0)
    assert np.allclose((eigen.U * eigen.lam) @ eigen.U.T, M, atol=1e-10)
    assert np.allclose(eigen.U.T @ eigen.U, np.eye(15), atol=1e-10)

def test_symEigenRejectsBadInput():
    with pytest.raises(NumericsError):
        symEigen(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(NumericsError):
        symEigen(np.ones((2, 3)))

def test_shiftedSolveResiduals(rng):
    for draw in range(100):
        n = int(rng.integers(2, 30))
        C = randomSymmetric(n, seed=draw)
        eigen = symEigen(C)
        rho = -2.0 * eigen.lam[0] + float(rng.uniform(0.5, 10.0))
        rhs = rng.standard_normal(n)
        v = shiftedSolve(eigen, rho, rhs)
        residual = np.linalg.norm(rho * v + 2.0 * C @ v - rhs)
        assert residual <= 1e-8 * (1.0 + np.linalg.norm(rhs))

def test_shiftedSolveMatrixRhs():
    C = randomSymmetric(6, seed=2)
    eigen = symEigen(C)
    rhs = np.arange(18.0).reshape(6, 3)
    V = shiftedSolve(eigen, 20.0, rhs)
    assert np.allclose(20.0 * V + 2.0 * C @ V, rhs, atol=1e-9)

def test_shiftedSolveSingularShift():
    eigen = symEigen(np.diag([-1.0, 1.0]))
    with pytest.raises(NumericsError):
        shiftedSolve(eigen, 2.0, np.ones(2))

def test_smallSpdSolve(rng):
    X = rng.standard_normal((10, 4))
    S = np.eye(4) + X.T @ X
    RHS = rng.standard_normal((4, 7))
    assert np.allclose(S @ smallSpdSolve(S, RHS), RHS, atol=1e-10)
    with pytest.raises(NumericsError):
        smallSpdSolve(-np.eye(3), np.ones(3))

def test_spectralConstants():
    indefinite = CostMatrix(np.diag([-3.0, 1.0]))
    assert spectralConstants(indefinite) == pytest.approx((6.0, 6.0))
    assert indefinite.spectralMeta is not None
    positive = CostMatrix(np.diag([1.0, 2.0]))
    L1, LH = spectralConstants(positive)
    assert L1 == pytest.approx(4.0)
    assert LH == 0.0

def test_spectralConstantsMatchNorm():
    C = randomSymmetric(20, seed=4)
    L1, LH = spectralConstants(CostMatrix(C))
    assert L1 == pytest.approx(2.0 * np.linalg.norm(C, 2), rel=1e-8)
    assert LH == pytest.approx(max(0.0, -2.0 * np.min(np.linalg.eigvalsh(C))), rel=1e-8)
