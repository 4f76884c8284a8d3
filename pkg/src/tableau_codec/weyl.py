"""Rank encoding of real sequences onto the triangular compactum.

A point of the compactum is a sequence ``z`` with ``1 <= z[k] <= k``; the
encoding of ``x`` sets ``z[k]`` to the rank of ``x[k]`` among ``x[1..k]``.
The order pattern of ``x`` and ``z`` determine each other, so the shift and
the statistic ``d_n`` can be evaluated on ``z`` alone.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ._kernels import prefix_ranks
from .errors import InvalidZ, TooShort
from .tableau_core import Realization

ZSequence = tuple[int, ...]


def check_z(z: Sequence[int]) -> ZSequence:
    z = tuple(int(v) for v in z)
    for k, v in enumerate(z, 1):
        if not 1 <= v <= k:
            raise InvalidZ(f"z[{k}] = {v} is outside 1..{k}")
    return z


def encode_weyl(x: Realization) -> ZSequence:
    """Prefix ranks ``z[k] = #{i <= k : x[i] <= x[k]}``, in O(n log n)."""
    a = np.asarray(x, dtype=float)
    if a.size == 0:
        return ()
    ranks = np.empty(a.size, dtype=np.int64)
    ranks[np.argsort(a, kind="stable")] = np.arange(a.size)
    return tuple(prefix_ranks(ranks).tolist())


class _Fenwick:
    """Counts over positions 1..n with order-statistic search."""

    def __init__(self, n: int, full: bool = False):
        self.n = n
        self.tree = [0] * (n + 1)
        if full:
            for i in range(1, n + 1):
                self.tree[i] += 1
                j = i + (i & -i)
                if j <= n:
                    self.tree[j] += self.tree[i]
        self.top = 1 << max(n.bit_length() - 1, 0) if n else 0

    def add(self, i: int, delta: int) -> None:
        while i <= self.n:
            self.tree[i] += delta
            i += i & -i

    def kth(self, k: int) -> int:
        """Smallest position whose prefix count reaches ``k``."""
        pos = 0
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= self.n and self.tree[nxt] < k:
                pos = nxt
                k -= self.tree[nxt]
            step >>= 1
        return pos + 1


def ranking_from_z(z: Sequence[int]) -> tuple[int, ...]:
    """Final ranks of ``x[1..n]`` among themselves, recovered from ``z``.

    Reading ``z`` backwards, ``x[k]`` is the ``z[k]``-th smallest of the
    values not yet placed.
    """
    z = check_z(z)
    n = len(z)
    free = _Fenwick(n, full=True)
    r = [0] * n
    for k in range(n - 1, -1, -1):
        rank = free.kth(z[k])
        r[k] = rank
        free.add(rank, -1)
    return tuple(r)


def shift_w(z: Sequence[int]) -> ZSequence:
    """The shift on the compactum: encoding of ``x`` with ``x[1]`` dropped."""
    z = check_z(z)
    if len(z) < 2:
        raise TooShort("the shift needs at least two coordinates")
    r = ranking_from_z(z)
    first = r[0]
    return tuple(z[k] - (1 if first < r[k] else 0) for k in range(1, len(z)))


def d_stat(z: Sequence[int]) -> int:
    """``d_n = #{i < n : x[1] > x[i]}`` evaluated on ``z``."""
    z = check_z(z)
    n = len(z)
    if n <= 1:
        return 0
    # rank of x[1] among x[1..k]; x[k] < x[1] exactly when z[k] <= that rank
    rank = 1
    for k in range(1, n - 1):
        if z[k] <= rank:
            rank += 1
    return rank - 1


def decode_first_weyl(z: Sequence[int]) -> float:
    """Finite-n estimate ``d_n / n`` of the first coordinate."""
    n = len(z)
    if n == 0:
        raise TooShort("cannot decode an empty sequence")
    return d_stat(z) / n
