"""Float-path backend selection.

The compiled extension is optional; when it is missing (source checkout
without a build step) a numpy implementation of the same two routines is
used. `BACKEND` records which one won so benchmarks and tests can compare
them explicitly via `python_backend()` / `compiled_backend()`.
"""

from __future__ import annotations

import numpy as np


def _py_gbinom_table(alpha: float, count: int) -> np.ndarray:
    out = np.empty(count, dtype=np.float64)
    out[0] = 1.0
    v = 1.0
    for k in range(1, count):
        v *= (alpha + k - 1) / k
        out[k] = v
    return out


def _py_lower_convolve(w, v) -> np.ndarray:
    w = np.asarray(w, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    n = v.shape[0]
    if w.shape[0] < n:
        raise ValueError("weight table shorter than value array")
    rev = w[:n][::-1]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        out[i] = np.dot(rev[n - 1 - i:], v[: i + 1])
    return out


def python_backend():
    return _py_gbinom_table, _py_lower_convolve


def compiled_backend():
    from . import _fastsum  # noqa: F401  (ImportError when not built)

    return _fastsum.gbinom_table, _fastsum.lower_convolve


try:
    gbinom_table, lower_convolve = compiled_backend()
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    gbinom_table, lower_convolve = python_backend()
    BACKEND = "python"
