"""Nerve of a standard tableau, the finite Schuetzenberger shift, and the
nerve-endpoint decoder for the first coordinate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyTableau, NonpositiveKappa
from .rsk import bump
from .tableau_core import Cell, Realization, StandardTableau, check_realization


@dataclass(frozen=True)
class Nerve:
    cells: tuple[Cell, ...]
    values: tuple[int, ...]

    @property
    def end(self) -> Cell:
        return self.cells[-1]


def _nerve_cells(rows: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    # 0-based walk: step to whichever of right/below holds the smaller entry
    i = j = 0
    path = [(0, 0)]
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            return path
        if below is None or (right is not None and right < below):
            j += 1
        else:
            i += 1
        path.append((i, j))


def nerve(q: StandardTableau) -> Nerve:
    if not q.rows:
        raise EmptyTableau("the empty tableau has no nerve")
    path = _nerve_cells(q.rows)
    return Nerve(
        tuple(Cell(i + 1, j + 1) for i, j in path),
        tuple(q.rows[i][j] for i, j in path),
    )


def sch_shift(q: StandardTableau) -> StandardTableau:
    """Slide entries back along the nerve, drop its last cell, subtract one.

    For ``q = Q(x1..xn)`` the result equals ``Q(x2..xn)``.
    """
    if not q.rows:
        raise EmptyTableau("cannot shift the empty tableau")
    rows = q.to_lists()
    path = _nerve_cells(rows)
    for (i, j), (k, l) in zip(path, path[1:]):
        rows[i][j] = rows[k][l]
    i, j = path[-1]
    del rows[i][j]
    if not rows[i]:
        del rows[i]
    return StandardTableau([[v - 1 for v in r] for r in rows])


def nerve_endpoint(q: StandardTableau) -> tuple[int, int]:
    """(row, column) of the last nerve cell, 1-based."""
    end = nerve(q).end
    return end.row, end.col


def decode_first_nerve(q: StandardTableau, kappa: float = 1.0) -> float:
    """Estimate of ``x1`` as ``kappa * row_of_nerve_end / sqrt(n)``, clamped to [0, 1]."""
    if kappa <= 0:
        raise NonpositiveKappa(f"kappa must be positive, got {kappa}")
    a1, _ = nerve_endpoint(q)
    return min(1.0, max(0.0, kappa * a1 / math.sqrt(q.n)))


def calibrate_kappa(x1: Sequence[float], raw: Sequence[float]) -> float:
    """Least-squares slope through the origin of ``x1`` on ``a1/sqrt(n)``."""
    sxy = sum(a * b for a, b in zip(x1, raw))
    sxx = sum(b * b for b in raw)
    if sxx == 0:
        raise NonpositiveKappa("calibration data carry no signal")
    return sxy / sxx


def q_tableau_stream(x: Realization) -> list[StandardTableau]:
    """Recording tableaux of every prefix of ``x``."""
    values = check_realization(x)
    p: list[list[float]] = []
    q: list[list[int]] = []
    out = []
    for k, v in enumerate(values, 1):
        r, _ = bump(p, v)
        if r == len(q):
            q.append([k])
        else:
            q[r].append(k)
        out.append(StandardTableau(q))
    return out
