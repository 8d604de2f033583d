"""Differential metric on MASAs along a Hamiltonian path.

The metric speed is ``4 sum_i chi_i`` where ``chi_i`` is the fidelity
susceptibility of eigenvector ``i``.  Derivatives are central differences
of phase-aligned eigenframes; nothing else is needed from the Hamiltonian.
"""
import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DegeneracyError, TrackingError, ValidationError
from .grassmann import dfs_distance, masa_distance
from .linalg import DEFAULT_TOL, as_square, dagger, is_hermitian
from .mori import Mori, _wrap

logger = logging.getLogger(__name__)

DEFAULT_H = 1e-4


@dataclass(frozen=True, eq=False)
class HamiltonianPath:
    """Path ``t -> H(t)``, either piecewise linear through ``nodes`` or a closed form ``func``.

    ``nodes`` is a sequence of ``(t, H)`` with strictly increasing ``t``.
    A closed-form path still needs two nodes (or ``t_range``) to fix its domain.
    """

    dim: int
    nodes: tuple = ()
    gap_tol: float = 1e-8
    func: Optional[Callable[[float], np.ndarray]] = None
    t_range: Optional[tuple] = None
    _ts: np.ndarray = field(init=False, repr=False)
    _hs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        ts = np.array([float(t) for t, _ in self.nodes])
        hs = [as_square(h, "H") for _, h in self.nodes]
        if any(h.shape != (self.dim, self.dim) for h in hs):
            raise ValidationError(f"every H must be {self.dim}x{self.dim}")
        if ts.size > 1 and np.any(np.diff(ts) <= 0):
            raise ValidationError("node times must be strictly increasing")
        if any(not is_hermitian(h, DEFAULT_TOL) for h in hs):
            raise ValidationError("every H must be Hermitian")
        if self.func is None and ts.size < 2:
            raise ValidationError("a node path needs at least two nodes")
        if self.t_range is None:
            if ts.size < 2:
                raise ValidationError("closed-form path needs t_range or two nodes")
            object.__setattr__(self, "t_range", (float(ts[0]), float(ts[-1])))
        object.__setattr__(self, "_ts", ts)
        object.__setattr__(self, "_hs", np.array(hs) if hs else np.empty((0, self.dim, self.dim)))

    @classmethod
    def from_function(cls, func, t0: float, t1: float, dim: int, gap_tol: float = 1e-8):
        return cls(dim=dim, func=func, t_range=(float(t0), float(t1)), gap_tol=gap_tol)

    def hamiltonian(self, t: float) -> np.ndarray:
        t0, t1 = self.t_range
        if not t0 <= t <= t1:
            raise ValidationError(f"t={t!r} outside path domain [{t0}, {t1}]")
        if self.func is not None:
            return as_square(self.func(t), "H")
        k = int(np.clip(np.searchsorted(self._ts, t) - 1, 0, self._ts.size - 2))
        w = (t - self._ts[k]) / (self._ts[k + 1] - self._ts[k])
        return (1 - w) * self._hs[k] + w * self._hs[k + 1]


@dataclass(frozen=True)
class MetricSample:
    t: float
    chi: tuple
    speed: float
    fs_speed: float


def eigenframe(path: HamiltonianPath, t: float) -> np.ndarray:
    h = path.hamiltonian(t)
    evals, evecs = np.linalg.eigh((h + dagger(h)) / 2)
    gaps = np.diff(evals)
    if gaps.size and gaps.min() <= path.gap_tol:
        raise DegeneracyError(f"H({t!r}) has eigenvalue gap {gaps.min():.3e} <= {path.gap_tol:.1e}")
    return evecs


def align_frame(ref: np.ndarray, frame: np.ndarray) -> np.ndarray:
    """Reorder and rephase the columns of ``frame`` to follow ``ref``.

    Level ``i`` of the result is the column with the largest overlap with
    ``ref[:, i]``, rotated so that ``<ref_i|out_i>`` is real positive.
    """
    g = dagger(ref) @ frame
    o = np.abs(g) ** 2
    match = np.argmax(o, axis=1)
    best = o[np.arange(o.shape[0]), match]
    if np.any(best < 0.5) or len(set(match.tolist())) != o.shape[0]:
        raise TrackingError(f"ambiguous level tracking, best overlap {best.min():.3f}")
    out = frame[:, match]
    c = g[np.arange(o.shape[0]), match]
    return out * (c.conj() / np.abs(c))


def aligned_frames(path: HamiltonianPath, t: float, h: float = DEFAULT_H):
    """MORIs at ``t - h``, ``t``, ``t + h`` with the outer frames aligned to the centre."""
    center = eigenframe(path, t)
    minus = align_frame(center, eigenframe(path, t - h))
    plus = align_frame(center, eigenframe(path, t + h))
    return _wrap(minus), _wrap(center), _wrap(plus)


def susceptibilities_from_frames(minus, center, plus, h: float) -> np.ndarray:
    """Central-difference ``chi_i = <di|di> - |<i|di>|^2`` from three aligned frames."""
    fm = minus.frame if isinstance(minus, Mori) else np.asarray(minus)
    f0 = center.frame if isinstance(center, Mori) else np.asarray(center)
    fp = plus.frame if isinstance(plus, Mori) else np.asarray(plus)
    di = (fp - fm) / (2 * h)
    norm2 = np.sum(di.real**2 + di.imag**2, axis=0)
    proj = np.einsum("ai,ai->i", f0.conj(), di)
    return norm2 - np.abs(proj) ** 2


def susceptibilities(path: HamiltonianPath, t: float, h: float = DEFAULT_H) -> np.ndarray:
    return susceptibilities_from_frames(*aligned_frames(path, t, h), h)


def metric_speed(path: HamiltonianPath, t: float, h: float = DEFAULT_H) -> MetricSample:
    """Metric speed ``4 sum chi_i`` and the Fubini-Study speed from the endpoint frames."""
    bm, b0, bp = aligned_frames(path, t, h)
    chi = susceptibilities_from_frames(bm, b0, bp, h)
    fs = (dfs_distance(bm, bp) / (2 * h)) ** 2
    return MetricSample(t=float(t), chi=tuple(float(c) for c in chi), speed=float(4 * chi.sum()), fs_speed=float(fs))


def chord_speed(path: HamiltonianPath, t: float, h: float = DEFAULT_H) -> float:
    """``(D(B(t-h), B(t+h)) / 2h)^2`` from the global Grassmannian distance."""
    bm, _, bp = aligned_frames(path, t, h)
    return (masa_distance(bm, bp) / (2 * h)) ** 2


def _nan_sample(t, d):
    nan = float("nan")
    return MetricSample(t=float(t), chi=(nan,) * d, speed=nan, fs_speed=nan)


def sweep(path: HamiltonianPath, h: float = DEFAULT_H, step: float = 0.1, workers: int = 1) -> list:
    """Metric samples on the grid ``t0 + h, t0 + h + step, ...`` up to ``t1 - h``.

    Points where the spectrum is degenerate (or levels cannot be tracked)
    are kept as all-NaN samples.
    """
    t0, t1 = path.t_range
    grid = np.arange(t0 + h, t1 - h + 1e-12 * max(1.0, abs(t1)), step)

    def one(t):
        try:
            return metric_speed(path, float(t), h)
        except (DegeneracyError, TrackingError) as exc:
            logger.warning("sweep gap at t=%r: %s", float(t), exc)
            return _nan_sample(t, path.dim)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, grid))
    return [one(t) for t in grid]


def samples_to_csv(samples, dim: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t"] + [f"chi_{i}" for i in range(dim)] + ["speed", "fs_speed"])
    for s in samples:
        w.writerow([repr(s.t)] + [repr(c) for c in s.chi] + [repr(s.speed), repr(s.fs_speed)])
    return buf.getvalue()
