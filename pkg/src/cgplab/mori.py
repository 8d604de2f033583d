"""Maximal orthogonal resolutions of the identity (MORIs).

A MORI is stored through an orthonormal frame: column ``i`` of
``Mori.frame`` is the vector whose projector is ``Pi_i``.  Frames that
differ by a permutation of columns or by column phases describe the same
MORI, hence the same maximal abelian subalgebra (MASA).
"""
import functools
from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, DimensionError, NonUnitaryError, ValidationError
from .linalg import DEFAULT_TOL, Tolerance, as_square, dagger, is_hermitian, validate_unitary


@dataclass(frozen=True, eq=False)
class Mori:
    frame: np.ndarray

    def __post_init__(self):
        frame = as_square(self.frame, "frame").copy()
        if not validate_unitary(frame):
            raise NonUnitaryError("MORI frame is not unitary")
        frame.flags.writeable = False
        object.__setattr__(self, "frame", frame)

    @property
    def dim(self) -> int:
        return self.frame.shape[0]

    @property
    def projectors(self) -> np.ndarray:
        """Array of shape ``(d, d, d)``; ``projectors[i]`` is ``|i><i|``."""
        f = self.frame
        return np.einsum("ai,bi->iab", f, f.conj())

    def __repr__(self):
        return f"Mori(dim={self.dim})"


def computational_mori(d: int) -> Mori:
    return Mori(np.eye(d, dtype=np.complex128))


def _wrap(frame: np.ndarray) -> Mori:
    # skips validation: caller guarantees a unitary frame
    m = object.__new__(Mori)
    frame = np.array(frame, dtype=np.complex128)
    frame.flags.writeable = False
    object.__setattr__(m, "frame", frame)
    return m


def mori_from_frame(u, tol: Tolerance = DEFAULT_TOL) -> Mori:
    u = as_square(u, "frame")
    if not validate_unitary(u, tol):
        raise NonUnitaryError("frame is not unitary")
    return _wrap(u)


def mori_from_hermitian(h, gap_tol: float = 1e-8, tol: Tolerance = DEFAULT_TOL) -> Mori:
    """Eigenbasis MORI of a non-degenerate Hermitian matrix, ascending eigenvalues."""
    h = as_square(h, "H")
    if not is_hermitian(h, tol):
        raise ValidationError("H is not Hermitian")
    evals, evecs = np.linalg.eigh((h + dagger(h)) / 2)
    gaps = np.diff(evals)
    if gaps.size and gaps.min() <= gap_tol:
        raise DegeneracyError(f"minimum eigenvalue gap {gaps.min():.3e} <= gap_tol {gap_tol:.1e}")
    return _wrap(evecs)


def _fix_column_phases(frame: np.ndarray, cutoff: float) -> np.ndarray:
    out = frame.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = int(np.argmax(np.abs(col) > cutoff))
        c = col[idx]
        if c.imag == 0 and c.real > 0:
            continue
        r = abs(c)
        out[:, k] = col * (c.conjugate() / r)
        # exactly real positive, so a second pass leaves the column untouched
        out[idx, k] = r
    return out


def _column_key_cmp(a: np.ndarray, b: np.ndarray, cutoff: float) -> int:
    ka = np.column_stack([a.real, a.imag]).ravel()
    kb = np.column_stack([b.real, b.imag]).ravel()
    for x, y in zip(ka, kb):
        if abs(x - y) > cutoff:
            return -1 if x > y else 1
    return 0


def canonical_form(b: Mori, tol: Tolerance = DEFAULT_TOL) -> Mori:
    """Deterministic representative of the permutation/phase class of ``b``.

    Each column is rotated so that its first entry of magnitude above
    ``tol.structural`` is real positive; columns are then sorted in
    descending lexicographic order of their (re, im) entry sequences, so the
    computational basis maps to the identity frame.  Entry differences
    below ``1e-8`` are treated as ties so that round-off does not reorder
    columns.
    """
    frame = _fix_column_phases(np.asarray(b.frame), tol.structural)
    cols = [frame[:, k] for k in range(frame.shape[1])]
    cmp = functools.partial(_column_key_cmp, cutoff=1e-8)
    order = sorted(range(len(cols)), key=functools.cmp_to_key(lambda i, j: cmp(cols[i], cols[j])))
    return _wrap(frame[:, order])


def _overlaps(b: Mori, b2: Mori) -> np.ndarray:
    if b.dim != b2.dim:
        raise DimensionError(f"MORI dimensions differ: {b.dim} vs {b2.dim}")
    g = dagger(b.frame) @ b2.frame
    return g.real**2 + g.imag**2


def equal_as_masa(b: Mori, b2: Mori, tol: float = 1e-10) -> bool:
    """True iff the projectors of ``b2`` are a permutation of those of ``b``.

    Matched projectors must have overlap ``|<i|j~>|^2 >= 1 - tol``; for
    rank-1 projectors this is ``||Pi_i - Pi~_j||_2^2 <= 2 tol``.
    """
    o = _overlaps(b, b2)
    best = np.argmax(o, axis=1)
    if len(set(best.tolist())) != b.dim:
        return False
    return bool(np.all(o[np.arange(b.dim), best] >= 1 - tol))


def product_mori(b1: Mori, b2: Mori) -> Mori:
    """MORI of ``Pi1_i (x) Pi2_j`` in row-major ``(i, j)`` order."""
    return _wrap(np.kron(b1.frame, b2.frame))


def rotate_mori(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> Mori:
    u = as_square(u, "U")
    if u.shape[0] != b.dim:
        raise DimensionError(f"U has dim {u.shape[0]}, MORI has dim {b.dim}")
    if not validate_unitary(u, tol):
        raise NonUnitaryError("U is not unitary")
    return _wrap(u @ b.frame)
