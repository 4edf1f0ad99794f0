"""numba versions of the kernels in :mod:`arctan_dioph._kernels`; imported on first use."""

from types import SimpleNamespace

import numba
import numpy as np


@numba.njit(cache=True, error_model="numpy")
def _scan_x_into(k, l, x_lo, x_hi, max_y, xs, ys):
    # fills xs/ys and returns (hits, next x); stops early when the buffer is full
    count = 0
    umax_y = np.uint64(max_y)
    for x in range(x_lo, x_hi + 1):
        # operands are positive and below INT64_SAFE; unsigned division is much cheaper
        num = np.uint64(l * (1 + k * x))
        den = np.uint64(x - k)
        y = num // den
        if y * den == num and y <= umax_y:
            xs[count] = x
            ys[count] = y
            count += 1
            if count == xs.shape[0]:
                return count, x + 1
    return count, x_hi + 1

def _scan_x_numba(k, l, x_lo, x_hi, max_y):
    xs = np.empty(256, np.int64)
    ys = np.empty(256, np.int64)
    out_x, out_y = [], []
    k, l, max_y = np.int64(k), np.int64(l), np.int64(max_y)
    while x_lo <= x_hi:
        count, x_lo = _scan_x_into(k, l, np.int64(x_lo), np.int64(x_hi), max_y, xs, ys)
        out_x.append(xs[:count].copy())
        out_y.append(ys[:count].copy())
    if not out_x:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(out_x), np.concatenate(out_y)

@numba.njit(cache=True, error_model="numpy")
def _divisor_count_table_numba(limit):
    counts = np.zeros(limit + 1, np.int64)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            counts[m] += 1
    return counts

@numba.njit(cache=True, error_model="numpy")
def _divisor_count_scan_numba(n):
    total = 0
    un = np.uint64(n)
    for d in range(1, n + 1):
        if un % np.uint64(d) == 0:
            total += 1
    return total

impl = SimpleNamespace(
    name="numba",
    scan_x=_scan_x_numba,
    divisor_count_table=lambda limit: _divisor_count_table_numba(np.int64(limit)),
    divisor_count_scan=lambda n: int(_divisor_count_scan_numba(np.int64(n))),
)
