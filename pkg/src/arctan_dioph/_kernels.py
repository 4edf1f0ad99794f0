"""Fixed-width inner loops used by the brute-force oracle.

Each kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
equivalent. The numba path is used when numba imports and the environment
variable ``ARCTAN_DIOPH_NUMBA`` is not ``"0"``. Callers must keep every
intermediate below ``INT64_SAFE``; larger inputs go through the pure-int
paths in :mod:`arctan_dioph.oracle`.
"""

from __future__ import annotations

import os
from functools import lru_cache
from types import SimpleNamespace

import numpy as np

INT64_SAFE = 1 << 62
NUMBA_ENV = "ARCTAN_DIOPH_NUMBA"
_CHUNK = 1 << 20

# -- numpy ------------------------------------------------------------------


def _scan_x_numpy(k, l, x_lo, x_hi, max_y):
    xs_out, ys_out = [], []
    for start in range(x_lo, x_hi + 1, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, x_hi + 1), dtype=np.int64)
        num = l * (1 + k * x)
        den = x - k
        hit = num % den == 0
        x = x[hit]
        y = num[hit] // den[hit]
        keep = y <= max_y
        xs_out.append(x[keep])
        ys_out.append(y[keep])
    if not xs_out:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(xs_out), np.concatenate(ys_out)


def _divisor_count_table_numpy(limit):
    counts = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        counts[d::d] += 1
    return counts


def _divisor_count_scan_numpy(n):
    total = 0
    for start in range(1, n + 1, _CHUNK):
        cand = np.arange(start, min(start + _CHUNK, n + 1), dtype=np.int64)
        total += int(np.count_nonzero(n % cand == 0))
    return total


numpy_impl = SimpleNamespace(
    name="numpy",
    scan_x=_scan_x_numpy,
    divisor_count_table=_divisor_count_table_numpy,
    divisor_count_scan=_divisor_count_scan_numpy,
)


# -- selection --------------------------------------------------------------


@lru_cache(maxsize=None)
def numba_impl() -> SimpleNamespace | None:
    """The numba backend, or None when numba is not importable."""
    try:
        from ._numba_kernels import impl
    except ImportError:  # pragma: no cover - numba is a declared dependency
        return None
    return impl


def select_backend(environ=None) -> SimpleNamespace:
    environ = os.environ if environ is None else environ
    if environ.get(NUMBA_ENV, "1") != "0" and numba_impl() is not None:
        return numba_impl()
    return numpy_impl


_active: SimpleNamespace | None = None


def backend() -> SimpleNamespace:
    """The backend in use; chosen on first call so numba is only imported when needed."""
    global _active
    if _active is None:
        _active = select_backend()
    return _active
