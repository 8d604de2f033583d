"""Kraus channels, the dephasing projection and superoperator matrices.

Superoperators act on column-major (Fortran order) vectorized operators,
so ``vec(A X B) = (B^T kron A) vec(X)``.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError
from .linalg import DEFAULT_TOL, Tolerance, as_square, dagger
from .mori import Mori

SUPEROP_CAP = 8


@dataclass(frozen=True, eq=False)
class KrausChannel:
    kraus: tuple = field()

    def __post_init__(self):
        ops = tuple(as_square(k, "Kraus operator") for k in self.kraus)
        if not ops:
            raise DimensionError("a channel needs at least one Kraus operator")
        d = ops[0].shape[0]
        if any(k.shape != (d, d) for k in ops):
            raise DimensionError("Kraus operators must share one square shape")
        object.__setattr__(self, "kraus", ops)

    @property
    def dim(self) -> int:
        return self.kraus[0].shape[0]

    def is_unital(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        s = sum(k @ dagger(k) for k in self.kraus)
        return bool(np.linalg.norm(s - np.eye(self.dim)) <= tol.structural)

    def is_trace_preserving(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        s = sum(dagger(k) @ k for k in self.kraus)
        return bool(np.linalg.norm(s - np.eye(self.dim)) <= tol.structural)

    def __repr__(self):
        return f"KrausChannel(dim={self.dim}, n_kraus={len(self.kraus)})"


def unitary_channel(u) -> KrausChannel:
    return KrausChannel((u,))


def dephasing_channel(b: Mori) -> KrausChannel:
    return KrausChannel(tuple(b.projectors))


@dataclass(frozen=True, eq=False)
class Superoperator:
    dim: int
    matrix: np.ndarray

    def apply(self, x) -> np.ndarray:
        x = as_square(x)
        return (self.matrix @ vec(x)).reshape(self.dim, self.dim, order="F")


def vec(x: np.ndarray) -> np.ndarray:
    return np.asarray(x).reshape(-1, order="F")


def _check_dim(d, x):
    if x.shape != (d, d):
        raise DimensionError(f"expected a {d}x{d} operator, got {x.shape}")


def apply_channel(t: KrausChannel, x) -> np.ndarray:
    x = as_square(x, "X")
    _check_dim(t.dim, x)
    return sum(k @ x @ dagger(k) for k in t.kraus)


def dephase(b: Mori, x) -> np.ndarray:
    """``sum_j Pi_j X Pi_j``: keep only the B-diagonal part of ``X``."""
    x = as_square(x, "X")
    _check_dim(b.dim, x)
    f = b.frame
    y = dagger(f) @ x @ f
    return (f * np.diag(y)) @ dagger(f)


def q_project(b: Mori, x) -> np.ndarray:
    x = as_square(x, "X")
    return x - dephase(b, x)


def superop_matrix(t, cap: int = SUPEROP_CAP) -> Superoperator:
    """Matrix of a channel (or of the dephasing of a MORI) on vectorized operators."""
    if isinstance(t, Mori):
        t = dephasing_channel(t)
    if t.dim > cap:
        raise DimensionError(f"dimension {t.dim} exceeds the superoperator cap {cap}")
    m = sum(np.kron(k.conj(), k) for k in t.kraus)
    return Superoperator(t.dim, m)


def _check_pair(t, b):
    if t.dim != b.dim:
        raise DimensionError(f"channel dim {t.dim} != MORI dim {b.dim}")


def is_incoherent(t: KrausChannel, b: Mori, tol: Tolerance = DEFAULT_TOL, cap: int = SUPEROP_CAP) -> bool:
    """True iff the channel commutes with the dephasing of ``b``."""
    _check_pair(t, b)
    mt = superop_matrix(t, cap).matrix
    md = superop_matrix(b, cap).matrix
    return bool(np.linalg.norm(mt @ md - md @ mt) <= tol.structural)


def is_incoherent_weak(t: KrausChannel, b: Mori, tol: Tolerance = DEFAULT_TOL, cap: int = SUPEROP_CAP) -> bool:
    """Weaker test ``D T D = T D``: the channel maps the MASA into itself."""
    _check_pair(t, b)
    mt = superop_matrix(t, cap).matrix
    md = superop_matrix(b, cap).matrix
    return bool(np.linalg.norm(md @ mt @ md - mt @ md) <= tol.structural)
