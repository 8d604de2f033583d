"""Hilbert-Schmidt B-coherence of a state."""
import numpy as np

from .channel import q_project
from .errors import DimensionError, InvalidStateError
from .linalg import DEFAULT_TOL, Tolerance, as_square, commutator, hs_norm, validate_density
from .mori import Mori


def _checked_state(rho, b, tol):
    rho = as_square(rho, "rho")
    if rho.shape[0] != b.dim:
        raise DimensionError(f"state dim {rho.shape[0]} != MORI dim {b.dim}")
    if not validate_density(rho, tol):
        raise InvalidStateError("input is not a density matrix")
    return rho


def coherence_raw(x, b: Mori) -> float:
    """``||Q_B(X)||_2^2`` for an arbitrary operator, no state validation."""
    return hs_norm(q_project(b, x)) ** 2


def coherence(rho, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """Squared HS distance from ``rho`` to the B-diagonal operators.

    Lies in ``[0, 1 - 1/d]`` for states.
    """
    return coherence_raw(_checked_state(rho, b, tol), b)


def coherence_commutator(rho, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """Same quantity as :func:`coherence`, via ``1/2 sum_j ||[Pi_j, rho]||_2^2``."""
    rho = _checked_state(rho, b, tol)
    return 0.5 * float(sum(hs_norm(commutator(p, rho)) ** 2 for p in b.projectors))


def uniform_superposition(b: Mori) -> np.ndarray:
    """Pure state with equal weight on every vector of ``b``; maximally coherent."""
    psi = b.frame.sum(axis=1) / np.sqrt(b.dim)
    return np.outer(psi, psi.conj())
