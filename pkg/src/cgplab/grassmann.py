"""Distances between MASAs and the overlap matrix.

The Grassmannian distance between the dephasing projections of two MORIs
is available in three forms (overlap matrix, superoperators, commutators)
which must agree.  The Fubini-Study distance and the ``phi`` measure are
built on ``|det O|``, the modulus of the overlap-matrix determinant.
"""
import warnings

import numpy as np

from .channel import SUPEROP_CAP, superop_matrix
from .errors import DimensionError
from .linalg import DEFAULT_TOL, Tolerance, as_square, commutator, dagger, singular_values
from .mori import Mori, rotate_mori


def _check_dims(b: Mori, b2: Mori):
    if b.dim != b2.dim:
        raise DimensionError(f"MORI dimensions differ: {b.dim} vs {b2.dim}")


def overlap_matrix(b: Mori, b2: Mori) -> np.ndarray:
    """``O[i, j] = |<i|j~>|^2``, a doubly stochastic real matrix."""
    _check_dims(b, b2)
    g = dagger(b.frame) @ b2.frame
    return g.real**2 + g.imag**2


def x_matrix(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Overlap matrix between ``b`` and its image under ``U``: ``|<i|U|j>|^2``."""
    return overlap_matrix(b, rotate_mori(u, b, tol))


def is_doubly_stochastic(o, tol: float = 1e-10) -> bool:
    o = np.asarray(o, dtype=float)
    return bool(
        np.all(o >= -tol)
        and np.all(o <= 1 + tol)
        and np.max(np.abs(o.sum(axis=0) - 1)) <= tol
        and np.max(np.abs(o.sum(axis=1) - 1)) <= tol
    )


def masa_distance(b: Mori, b2: Mori) -> float:
    """``sqrt(2 (d - ||O||_2^2))``.

    Rows of ``O`` sum to one, so ``d - ||O||^2 = sum_i sum_{j != k} O_ij O_ik``.
    That form has no cancellation for nearby MASAs.  Results below the
    round-off floor ``64 d eps`` are returned as exactly ``0.0``.
    """
    o = overlap_matrix(b, b2)
    d = b.dim
    others = o @ (np.ones((d, d)) - np.eye(d))
    dist = float(np.sqrt(max(0.0, 2.0 * np.sum(o * others))))
    return 0.0 if dist <= 64 * d * np.finfo(float).eps else dist


def masa_distance_superop(b: Mori, b2: Mori, cap: int = SUPEROP_CAP) -> float:
    """HS norm of the difference of the two dephasing superoperators."""
    _check_dims(b, b2)
    m1 = superop_matrix(b, cap).matrix
    m2 = superop_matrix(b2, cap).matrix
    return float(np.linalg.norm(m1 - m2))


def masa_distance_commutator(b: Mori, b2: Mori) -> float:
    """``sqrt(sum_ij ||[Pi_i, Pi~_j]||_2^2)``."""
    _check_dims(b, b2)
    total = 0.0
    for p in b.projectors:
        for q in b2.projectors:
            c = commutator(p, q)
            total += float(np.sum(c.real**2 + c.imag**2))
    return float(np.sqrt(total))


def abs_det_overlap(o) -> float:
    """``|det O|`` as the product of singular values, accumulated in log space.

    Singular values below ``d * eps * s_max`` count as zero, so a
    numerically singular matrix gives exactly ``0.0``.
    """
    s = singular_values(o)
    if s[0] == 0:
        return 0.0
    if s[-1] <= s.size * np.finfo(float).eps * s[0]:
        return 0.0
    return float(np.exp(np.sum(np.log(s))))


def _dfs_from_overlap(o: np.ndarray) -> float:
    det = abs_det_overlap(o)
    if det > 1 + 1e-8:
        warnings.warn(f"|det O| = {det!r} exceeds 1; input is not doubly stochastic", RuntimeWarning)
    if det < 0.5:
        return float(np.arccos(det))
    # Near 1, arccos|det O| amplifies round-off in the diagonal of O.  Write
    # O = I - L with L built from the off-diagonal overlaps (accurate to full
    # relative precision), then ln|det O| = sum ln|1 - lambda(L)| and
    # D_FS = 2 arcsin(sqrt((1 - |det O|) / 2)).
    off = o - np.diag(np.diag(o))
    lap = np.diag(off.sum(axis=1)) - off
    lam = np.linalg.eigvals(lap)
    # ln|1 - lam| = ln(1 - 2 Re lam + |lam|^2) / 2
    log_det = float(0.5 * np.sum(np.log1p(-2 * lam.real + np.abs(lam) ** 2)))
    one_minus = max(0.0, -np.expm1(log_det))
    return float(2 * np.arcsin(min(1.0, np.sqrt(one_minus / 2))))


def dfs_distance(b: Mori, b2: Mori) -> float:
    """Fubini-Study distance ``arccos |det O|``, in ``[0, pi/2]``."""
    return _dfs_from_overlap(overlap_matrix(b, b2))


def cgp_tilde(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """Fubini-Study distance between ``b`` and its image under ``U``."""
    return _dfs_from_overlap(x_matrix(u, b, tol))


def phi_measure(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """``-(1/d) ln |det X(U)|``; ``inf`` when ``X(U)`` is singular.

    Additive on product MORIs: ``phi(U1 kron U2) = phi(U1) + phi(U2)``.
    """
    u = as_square(u, "U")
    x = x_matrix(u, b, tol)
    s = singular_values(x)
    if s[0] == 0 or s[-1] <= s.size * np.finfo(float).eps * s[0]:
        return float("inf")
    return float(max(0.0, -np.sum(np.log(s)) / b.dim))
