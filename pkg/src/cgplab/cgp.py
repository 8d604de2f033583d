"""Coherence generating power (CGP) of unital maps.

Closed forms, the distance relation, a Monte Carlo estimator of the
ensemble average over uniformly random incoherent states, and the random
inputs (Haar unitaries, flat simplex weights) used to exercise them.
"""
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import KrausChannel, apply_channel, q_project, unitary_channel
from .errors import DimensionError, NonUnitaryError
from .grassmann import masa_distance
from .linalg import DEFAULT_TOL, Tolerance, as_square, dagger, hs_norm, validate_unitary
from .mori import Mori, rotate_mori

_CHUNK = 20_000


def normalization(d: int) -> float:
    """``1 / (d (d + 1))``."""
    return 1.0 / (d * (d + 1))


def max_cgp(d: int) -> float:
    """Largest CGP of a unitary in dimension ``d``, reached by mutually unbiased bases."""
    return (d - 1) / (d * (d + 1))


@dataclass(frozen=True)
class CgpEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int


def _checked_unitary(u, b: Mori, tol: Tolerance) -> np.ndarray:
    u = as_square(u, "U")
    if u.shape[0] != b.dim:
        raise DimensionError(f"U has dim {u.shape[0]}, MORI has dim {b.dim}")
    if not validate_unitary(u, tol):
        raise NonUnitaryError("U is not unitary")
    return u


def cgp_unital(t: KrausChannel, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """``N_d sum_j ||Q_B T(Pi_j)||_2^2``.

    Non-unital channels get a ``RuntimeWarning``; the formula is still
    evaluated.
    """
    if t.dim != b.dim:
        raise DimensionError(f"channel dim {t.dim} != MORI dim {b.dim}")
    if not t.is_unital(tol):
        warnings.warn("channel is not unital; CGP closed form assumes unitality", RuntimeWarning)
    total = sum(hs_norm(q_project(b, apply_channel(t, p))) ** 2 for p in b.projectors)
    return normalization(b.dim) * float(total)


def cgp_unitary(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """``N_d (d - sum_ij |<i|U|j>|^4)`` with ``<i|`` running over the frame of ``b``.

    Evaluated as ``N_d sum_ij x_ij (1 - x_ij)``, equal because the rows of
    ``x = |<i|U|j>|^2`` sum to one; every term is non-negative.
    """
    u = _checked_unitary(u, b, tol)
    v = dagger(b.frame) @ u @ b.frame
    x = v.real**2 + v.imag**2
    return normalization(b.dim) * max(0.0, float(np.sum(x * (1 - x))))


def cgp_from_distance(u, b: Mori, tol: Tolerance = DEFAULT_TOL) -> float:
    """``(N_d / 2) D(A_B, U(A_B))^2``."""
    u = _checked_unitary(u, b, tol)
    return 0.5 * normalization(b.dim) * masa_distance(b, rotate_mori(u, b, tol)) ** 2


def haar_unitary(d: int, seed=None) -> np.ndarray:
    """Haar-random ``d x d`` unitary: QR of a complex Ginibre matrix, R-diagonal phases removed."""
    if d < 1:
        raise ValueError("d must be >= 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def fourier_unitary(d: int) -> np.ndarray:
    """DFT matrix ``exp(2 pi i j k / d) / sqrt(d)``; its columns are unbiased to the computational basis."""
    if d < 1:
        raise ValueError("d must be >= 1")
    jk = np.outer(np.arange(d), np.arange(d))
    return np.exp(2j * np.pi * jk / d) / np.sqrt(d)


def sample_simplex(d: int, n: int, rng) -> np.ndarray:
    """``n`` points uniform on the probability simplex (flat Dirichlet), shape ``(n, d)``."""
    e = rng.standard_exponential((n, d))
    return e / e.sum(axis=1, keepdims=True)


def sample_incoherent_state(b: Mori, rng=None) -> np.ndarray:
    """Random ``sum_j p_j Pi_j`` with ``p`` uniform on the simplex."""
    rng = np.random.default_rng(rng)
    p = sample_simplex(b.dim, 1, rng)[0]
    return (b.frame * p) @ dagger(b.frame)


def _images_in_frame(t_or_u, b: Mori, tol: Tolerance) -> np.ndarray:
    # T(Pi_j) written in the frame of b, shape (d, d, d)
    if isinstance(t_or_u, KrausChannel):
        t = t_or_u
        if t.dim != b.dim:
            raise DimensionError(f"channel dim {t.dim} != MORI dim {b.dim}")
        if not t.is_unital(tol):
            warnings.warn("channel is not unital; CGP closed form assumes unitality", RuntimeWarning)
    else:
        t = unitary_channel(_checked_unitary(t_or_u, b, tol))
    f = b.frame
    return np.stack([dagger(f) @ apply_channel(t, p) @ f for p in b.projectors])


def _lane_values(images: np.ndarray, n: int, ss: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.default_rng(ss)
    d = images.shape[0]
    out = np.empty(n)
    diag = np.arange(d)
    for start in range(0, n, _CHUNK):
        m = min(_CHUNK, n - start)
        p = sample_simplex(d, m, rng)
        rho = np.einsum("nj,jab->nab", p, images)
        total = np.sum(rho.real**2 + rho.imag**2, axis=(1, 2))
        dg = rho[:, diag, diag]
        out[start:start + m] = total - np.sum(dg.real**2 + dg.imag**2, axis=1)
    return out


def estimate_cgp(t_or_u, b: Mori, n: int, seed: int = 0, workers: int = 1,
                 tol: Tolerance = DEFAULT_TOL) -> CgpEstimate:
    """Monte Carlo estimate of the CGP of a channel or unitary.

    Averages the B-coherence of ``T(rho)`` over ``n`` incoherent states
    ``rho`` drawn uniformly from the simplex.  Lane ``i`` of ``workers``
    draws from ``SeedSequence(seed).spawn(workers)[i]`` and handles
    ``n // workers`` samples (the first ``n % workers`` lanes one more).
    The result depends only on ``(seed, workers)``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    images = _images_in_frame(t_or_u, b, tol)
    streams = np.random.SeedSequence(seed).spawn(workers)
    counts = [n // workers + (1 if i < n % workers else 0) for i in range(workers)]
    jobs = [(c, s) for c, s in zip(counts, streams) if c > 0]
    if workers == 1:
        parts = [_lane_values(images, c, s) for c, s in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _lane_values(images, *job), jobs))
    values = np.concatenate(parts)
    return CgpEstimate(
        mean=float(np.mean(values)),
        stderr=float(np.std(values, ddof=1) / np.sqrt(n)),
        samples=n,
        seed=seed,
    )
