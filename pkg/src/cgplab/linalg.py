"""Dense complex matrix helpers shared by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ValidationError


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances.

    ``structural`` is used by validators (unitarity, hermiticity, ...),
    ``equality`` for comparing computed values.
    """

    structural: float = 1e-10
    equality: float = 1e-12

    def __post_init__(self):
        if not (self.structural > 0 and self.equality > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.structural < self.equality:
            raise ValueError("structural tolerance must be >= equality tolerance")


DEFAULT_TOL = Tolerance()


def as_matrix(a, name="matrix") -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError(f"{name} has non-finite entries")
    return m


def as_square(a, name="matrix") -> np.ndarray:
    m = as_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {m.shape}")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def _same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``tr(A^dagger B)``, antilinear in ``a``."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    _same_shape(a, b)
    return complex(np.vdot(a, b))


def hs_norm(a) -> float:
    a = as_matrix(a)
    # sum |a_ij|^2 directly; sqrt(hs_inner(a, a).real) is the same number
    return float(np.sqrt(np.sum(a.real**2 + a.imag**2)))


def commutator(a, b) -> np.ndarray:
    a = as_square(a, "A")
    b = as_square(b, "B")
    _same_shape(a, b)
    return a @ b - b @ a


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a, "A"), as_matrix(b, "B"))


def is_hermitian(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = as_square(a)
    return bool(np.max(np.abs(a - dagger(a))) <= tol.structural)


def validate_unitary(u, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff every entry of ``U^dagger U - I`` is within ``tol.structural``."""
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    err = dagger(u) @ u - np.eye(u.shape[0])
    return bool(np.max(np.abs(err)) <= tol.structural)


def validate_density(rho, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff ``rho`` is Hermitian, positive semidefinite and unit trace (all within tol)."""
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        return False
    if not is_hermitian(rho, tol):
        return False
    if abs(np.trace(rho) - 1) > tol.structural:
        return False
    evals = np.linalg.eigvalsh((rho + dagger(rho)) / 2)
    return bool(evals[0] >= -tol.structural)


def singular_values(a) -> np.ndarray:
    """Singular values in descending order.

    Raises ``numpy.linalg.LinAlgError`` if the SVD does not converge.
    """
    return np.linalg.svd(as_matrix(a), compute_uv=False)
