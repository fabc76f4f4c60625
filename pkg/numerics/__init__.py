"""Dense symmetric linear algebra shared by the vector and matrix solvers."""
import numpy as np
import scipy.linalg

symmetryTolerance = 1e-10
shiftTolerance = 1e-12

class NumericsError(ArithmeticError):
    pass

class SymEigen:
    """Eigendecomposition M = U Diag(lam) U^T, eigenvalues ascending."""
    def __init__(self, U, lam):
        self.U = U
        self.lam = lam

    @property
    def n(self):
        return self.lam.size

def symEigen(M):
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NumericsError('Expected a square matrix, got shape %s' % (M.shape,))
    asymmetry = np.max(np.abs(M - M.T)) if M.size else 0.0
    if asymmetry > symmetryTolerance:
        raise NumericsError('Matrix is not symmetric (max |M - M^T| = %g)' % asymmetry)
    try:
        lam, U = scipy.linalg.eigh(M, check_finite=True)
    except (scipy.linalg.LinAlgError, ValueError) as err:
        raise NumericsError('Symmetric eigendecomposition failed: %s' % err) from err
    return SymEigen(U, lam)

def shiftedSolve(eigen, rho, rhs):
    """Solve (rho I + 2C) v = rhs with the cached eigendecomposition of C."""
    shifted = 2.0 * eigen.lam + rho
    closest = np.min(np.abs(shifted))
    if closest < shiftTolerance:
        raise NumericsError('rho I + 2C is numerically singular (|2 lambda + rho| = %g at rho = %g)' % (closest, rho))
    rhs = np.asarray(rhs, dtype=float)
    projected = eigen.U.T @ rhs
    if projected.ndim == 1:
        return eigen.U @ (projected / shifted)
    return eigen.U @ (projected / shifted[:, None])

def smallSpdSolve(S, RHS):
    try:
        factor = scipy.linalg.cho_factor(S, lower=True, check_finite=True)
    except (scipy.linalg.LinAlgError, ValueError) as err:
        raise NumericsError('r x r system lost positive definiteness: %s' % err) from err
    return scipy.linalg.cho_solve(factor, RHS, check_finite=False)

def spectralConstants(cost, eigen=None):
    """L1 = 2 max|lambda(C)| and LH = max(0, -2 lambda_min(C)); cached on cost."""
    if cost.spectralMeta is not None:
        return cost.spectralMeta
    if eigen is None:
        eigen = symEigen(cost.C)
    L1 = 2.0 * float(np.max(np.abs(eigen.lam)))
    LH = max(0.0, -2.0 * float(eigen.lam[0]))
    cost.spectralMeta = (L1, LH)
    return cost.spectralMeta
