"""Row-insertion RSK for real words, its inverse, and Knuth equivalences."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DuplicateValue,
    EntryMultisetMismatch,
    InvalidTableau,
    LengthMismatch,
    ShapeMismatch,
)
from .tableau_core import (
    Cell,
    RealTableau,
    Realization,
    StandardTableau,
    check_realization,
    validate_real,
    validate_standard,
)

# BFS over Knuth moves visits a whole plactic class; keep it to small words.
MAX_BFS_LENGTH = 10


@dataclass(frozen=True)
class RskPair:
    p: RealTableau
    q: StandardTableau


def bump(rows: list[list], v) -> tuple[int, int]:
    """Row-insert ``v`` into ``rows`` in place.

    Returns the 0-based (row, col) of the cell added to the shape.
    """
    r = 0
    while True:
        if r == len(rows):
            rows.append([v])
            return r, 0
        row = rows[r]
        j = bisect_right(row, v)
        if j == len(row):
            row.append(v)
            return r, j
        row[j], v = v, row[j]
        r += 1


def row_insert(p: RealTableau, v: float) -> tuple[RealTableau, Cell]:
    v = float(v)
    if any(v in row for row in p.rows):
        raise DuplicateValue(f"{v!r} is already in the tableau")
    rows = p.to_lists()
    r, c = bump(rows, v)
    return RealTableau(rows), Cell(r + 1, c + 1)


def _rsk_lists(x: Sequence[float]) -> tuple[list[list[float]], list[list[int]]]:
    p: list[list[float]] = []
    q: list[list[int]] = []
    for k, v in enumerate(x, 1):
        r, _ = bump(p, v)
        if r == len(q):
            q.append([k])
        else:
            q[r].append(k)
    return p, q


def rsk(x: Realization) -> RskPair:
    values = check_realization(x)
    p, q = _rsk_lists(values)
    return RskPair(RealTableau(p), StandardTableau(q))


def insertion_tableau(x: Realization) -> RealTableau:
    return rsk(x).p


def recording_tableau(x: Realization) -> StandardTableau:
    return rsk(x).q


def inverse_rsk(pair: RskPair) -> tuple[float, ...]:
    p, q = pair.p, pair.q
    if not _same_row_lengths(p, q):
        raise ShapeMismatch(f"P has rows {[len(r) for r in p.rows]}, Q has rows {[len(r) for r in q.rows]}")
    if not validate_real(p):
        raise InvalidTableau("P is not a valid real tableau")
    if not validate_standard(q):
        raise InvalidTableau("Q is not a valid standard tableau")

    rows = p.to_lists()
    where = {v: cell for cell, v in q.cells()}
    n = q.n
    out = [0.0] * n
    for k in range(n, 0, -1):
        r = where[k].row - 1
        v = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            j = bisect_left(row, v) - 1
            row[j], v = v, row[j]
        out[k - 1] = v
    return tuple(out)


def _same_row_lengths(p: RealTableau, q: StandardTableau) -> bool:
    return [len(r) for r in p.rows] == [len(r) for r in q.rows]


# -- permutations ----------------------------------------------------------


def permutation_word(perm: Sequence[int]) -> tuple[float, ...]:
    """Embed a permutation of 1..n as the real word sigma(k)/(n+1)."""
    n = len(perm)
    return tuple(s / (n + 1) for s in perm)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, s in enumerate(perm, 1):
        inv[s - 1] = i
    return tuple(inv)


def standardize(w: Sequence[float]) -> tuple[int, ...]:
    """Replace each entry by its rank (1-based) within ``w``."""
    order = sorted(range(len(w)), key=w.__getitem__)
    ranks = [0] * len(w)
    for rank, i in enumerate(order, 1):
        ranks[i] = rank
    return tuple(ranks)


# -- Knuth equivalence -----------------------------------------------------


def knuth_neighbors(w: Realization) -> list[tuple[float, ...]]:
    """Words one elementary Knuth move away from ``w``.

    With a < b < c the moves are ``bac <-> bca`` (swap the last two letters
    of the window) and ``acb <-> cab`` (swap the first two).
    """
    w = tuple(w)
    out: list[tuple[float, ...]] = []
    for i in range(len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if y < x < z or z < x < y:
            nb = w[: i + 1] + (z, y) + w[i + 3 :]
        elif x < z < y or y < z < x:
            nb = w[:i] + (y, x) + w[i + 2 :]
        else:
            continue
        if nb not in out:
            out.append(nb)
    return out


def knuth_class(w: Realization) -> set[tuple[float, ...]]:
    """All words reachable from ``w`` by Knuth moves (breadth-first)."""
    w = tuple(w)
    if len(w) > MAX_BFS_LENGTH:
        raise ValueError(f"BFS closure is limited to words of length <= {MAX_BFS_LENGTH}")
    seen = {w}
    queue = deque([w])
    while queue:
        for nb in knuth_neighbors(queue.popleft()):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def _check_pair(w1: Sequence[float], w2: Sequence[float]) -> None:
    if len(w1) != len(w2):
        raise LengthMismatch(f"lengths differ: {len(w1)} vs {len(w2)}")


def knuth_equivalent(w1: Realization, w2: Realization, *, method: str = "tableau") -> bool:
    """Whether ``w1`` and ``w2`` lie in the same plactic class.

    ``method="tableau"`` compares insertion tableaux; ``method="bfs"``
    searches the move graph directly and serves as an independent check.
    """
    _check_pair(w1, w2)
    if sorted(w1) != sorted(w2):
        raise EntryMultisetMismatch("words do not share the same entries")
    if method == "tableau":
        return rsk(w1).p == rsk(w2).p
    if method == "bfs":
        return tuple(w2) in knuth_class(w1)
    raise ValueError(f"unknown method {method!r}")


def dual_knuth_equivalent(w1: Realization, w2: Realization) -> bool:
    _check_pair(w1, w2)
    return rsk(w1).q == rsk(w2).q
