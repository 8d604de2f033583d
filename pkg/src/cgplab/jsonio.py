"""JSON matrix documents and deterministic result serialization.

A matrix document is ``{"rows": r, "cols": c, "data": [[[re, im], ...], ...]}``.
"""
import hashlib
import json
import math

import numpy as np

from .errors import ValidationError


def matrix_from_doc(doc) -> np.ndarray:
    try:
        rows, cols, data = int(doc["rows"]), int(doc["cols"]), doc["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed matrix document: {exc}") from None
    if rows < 1 or cols < 1 or len(data) != rows or any(len(r) != cols for r in data):
        raise ValidationError(f"matrix data does not match {rows}x{cols}")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        for j, entry in enumerate(row):
            if isinstance(entry, (int, float)):
                re, im = entry, 0.0
            elif isinstance(entry, (list, tuple)) and len(entry) == 2:
                re, im = entry
            else:
                raise ValidationError(f"entry ({i}, {j}) must be [re, im]")
            out[i, j] = complex(float(re), float(im))
    if not np.all(np.isfinite(out)):
        raise ValidationError("matrix has non-finite entries")
    return out


def matrix_to_doc(m) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    rows, cols = m.shape
    return {
        "rows": rows,
        "cols": cols,
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def load_json(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(raw), hashlib.sha256(raw).hexdigest()
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from None


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats with 17 significant digits."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(json.dumps(str(k)) + ": " + dumps(v) for k, v in items) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
