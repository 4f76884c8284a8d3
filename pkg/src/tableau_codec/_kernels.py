"""Compiled inner loops for long Monte Carlo runs.

The pure-Python routines in ``rsk`` and ``experiments`` are the reference;
these kernels must agree with them exactly and are tested against them.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

_OVERFLOW = -2
_NOT_YET = -1


@njit(cache=True)
def _arrival(x, m, cap_rows, cap_cols):
    p = np.empty((cap_rows, cap_cols))
    lens = np.zeros(cap_rows, dtype=np.int64)
    nrows = 0
    tr = -1
    tc = -1
    for k in range(x.shape[0]):
        v = x[k]
        carried = k == m - 1
        r = 0
        while True:
            if r == nrows:
                if r >= cap_rows:
                    return _OVERFLOW
                p[r, 0] = v
                lens[r] = 1
                nrows += 1
                if carried:
                    tr = r
                    tc = 0
                break
            ln = lens[r]
            j = np.searchsorted(p[r, :ln], v, side="right")
            if j == ln:
                if ln >= cap_cols:
                    return _OVERFLOW
                p[r, ln] = v
                lens[r] = ln + 1
                if carried:
                    tr = r
                    tc = ln
                break
            if carried:
                tr = r
                tc = j
                carried = False
            elif tr == r and tc == j:
                carried = True
            bumped = p[r, j]
            p[r, j] = v
            v = bumped
            r += 1
        if tc == 0:
            return k + 1
    return _NOT_YET


@njit(cache=True)
def prefix_ranks(ranks):
    """``z[k] = 1 + #{i < k : ranks[i] < ranks[k]}`` for 0-based distinct ranks."""
    n = ranks.shape[0]
    tree = np.zeros(n + 1, dtype=np.int64)
    z = np.empty(n, dtype=np.int64)
    for k in range(n):
        i = ranks[k]  # Fenwick prefix sum over 1..ranks[k]
        c = 0
        while i > 0:
            c += tree[i]
            i -= i & -i
        z[k] = c + 1
        i = ranks[k] + 1
        while i <= n:
            tree[i] += 1
            i += i & -i
    return z


def arrival_step_fast(x: np.ndarray, m: int) -> int | None:
    """Compiled equivalent of :func:`tableau_codec.experiments.arrival_step`."""
    x = np.ascontiguousarray(x, dtype=float)
    cap = 4 * math.isqrt(x.size) + 16
    while True:
        out = _arrival(x, m, cap, cap)
        if out != _OVERFLOW:
            return None if out == _NOT_YET else int(out)
        cap = min(2 * cap, x.size + 1)
