"""Closed-form qubit (d = 2) references.

Qubit MORIs are pairs ``(I +/- n.sigma) / 2`` labelled by a unit Bloch
vector ``n``; ``n`` and ``-n`` give the same MASA.
"""
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .mori import Mori, _wrap

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])


@dataclass(frozen=True)
class BlochVector:
    n: tuple

    def __post_init__(self):
        v = np.asarray(self.n, dtype=float)
        if v.shape != (3,):
            raise ValidationError("Bloch vector needs 3 components")
        if abs(np.linalg.norm(v) - 1) > 1e-10:
            raise ValidationError(f"Bloch vector has norm {np.linalg.norm(v)!r}, expected 1")
        object.__setattr__(self, "n", tuple(float(c) for c in v))

    def __array__(self, dtype=None, copy=None):
        return np.array(self.n, dtype=dtype)


def _unit(n) -> np.ndarray:
    return np.asarray(BlochVector(tuple(np.asarray(n, dtype=float).ravel())))


def pauli_dot(n) -> np.ndarray:
    return np.einsum("k,kab->ab", np.asarray(n, dtype=float), PAULI)


def bloch_projector(n, sign: int = 1) -> np.ndarray:
    return 0.5 * (np.eye(2) + sign * pauli_dot(n))


def mori_from_bloch(n) -> Mori:
    """Eigenframe of ``n.sigma``, the ``+1`` eigenvector first.

    Each column is phased so its largest-magnitude entry is real positive.
    """
    n = _unit(n)
    _, vecs = np.linalg.eigh(pauli_dot(n))
    frame = vecs[:, ::-1].copy()
    for k in range(2):
        i = int(np.argmax(np.abs(frame[:, k])))
        c = frame[i, k]
        frame[:, k] *= c.conjugate() / abs(c)
        frame[i, k] = abs(c)
    return _wrap(frame)


def bloch_angle(n, m) -> float:
    """``psi = arccos(n . m)`` in ``[0, pi]``."""
    c = float(np.dot(_unit(n), _unit(m)))
    return float(np.arccos(min(1.0, max(-1.0, c))))


def qubit_distance(n, m) -> float:
    """Grassmannian distance ``sqrt(2) |sin psi|`` between the MASAs of ``n`` and ``m``."""
    return float(np.sqrt(2.0) * abs(np.sin(bloch_angle(n, m))))


def qubit_overlap(n, m) -> np.ndarray:
    """Overlap matrix ``(1 + a b n.m) / 2`` for ``a, b`` in ``(+, -)``."""
    c = float(np.dot(_unit(n), _unit(m)))
    s = np.array([1.0, -1.0])
    return 0.5 * (1 + np.outer(s, s) * c)


def qubit_unitary(theta: float, phi: float) -> np.ndarray:
    """``a|0><0| + a*|1><1| - b*|0><1| + b|1><0|``, ``a = cos(theta/2)``, ``b = e^{i phi} sin(theta/2)``.

    Maps ``n = z`` to ``(sin t cos p, sin t sin p, cos t)``.
    """
    a = np.cos(theta / 2)
    b = np.exp(1j * phi) * np.sin(theta / 2)
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]], dtype=np.complex128)


def qubit_cgp(theta: float) -> float:
    return float(np.sin(theta) ** 2 / 6.0)


def qubit_dfs(psi: float) -> float:
    """Fubini-Study distance ``min(psi, pi - psi)`` for Bloch angle ``psi`` in ``[0, pi]``."""
    if not 0.0 <= psi <= np.pi:
        raise ValidationError(f"psi={psi!r} outside [0, pi]")
    return float(min(psi, np.pi - psi))
