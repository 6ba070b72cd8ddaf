"""Dense complex-matrix kernel.

Everything operates on plain ``numpy.ndarray`` values with complex128
entries.  Dimensions stay at or below 6x6, so the emphasis is on validated,
deterministic primitives rather than performance.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    GmqdError,
    NonSquareError,
    NotHermitianError,
)

HERMITIAN_TOL = 1e-9
ALGEBRA_TOL = 1e-12


def as_matrix(values) -> np.ndarray:
    """Coerce to a nonempty 2-D complex array, rejecting NaN/Inf entries."""
    mat = np.asarray(values, dtype=complex)
    if mat.ndim != 2 or mat.size == 0:
        raise GmqdError(f"expected a nonempty 2-D matrix, got shape {mat.shape}")
    if not np.isfinite(mat.real).all() or not np.isfinite(mat.imag).all():
        raise GmqdError("matrix entries must be finite")
    return mat


def kron(a, b) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def trace(m) -> complex:
    """Sum of the diagonal of a square matrix."""
    mat = as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        raise NonSquareError(f"trace needs a square matrix, got shape {mat.shape}")
    return complex(np.trace(mat))


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product tr(a^dag b) of equal-shape square matrices."""
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape or ma.shape[0] != ma.shape[1]:
        raise DimensionMismatchError(
            f"hs_inner needs equal square shapes, got {ma.shape} and {mb.shape}"
        )
    return complex(np.vdot(ma, mb))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    """True when m is square and equals its conjugate transpose within tol."""
    mat = as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        return False
    return bool(np.max(np.abs(mat - mat.conj().T)) <= tol)


def hermitian_eigenvalues(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    mat = as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        raise NonSquareError(f"eigenvalues need a square matrix, got shape {mat.shape}")
    deviation = float(np.max(np.abs(mat - mat.conj().T)))
    if deviation > tol:
        raise NotHermitianError(f"matrix deviates from Hermitian by {deviation:.3e}")
    return np.linalg.eigvalsh(mat)
