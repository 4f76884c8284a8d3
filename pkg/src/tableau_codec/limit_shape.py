"""Limit curve, arch surface, and scaled step functions of tableaux.

Coordinates: a diagram with ``n`` cells is shrunk by ``sqrt(n)``. ``p`` is
the scaled row index, ``q`` the scaled column index, so the unit cell
``(i, j)`` covers ``[i-1, i) x [j-1, j)`` before scaling. The rotated frame
is ``u = (q - p)/2``, ``v = (q + p)/2``; there the limit boundary is
``v = omega(u)`` on ``|u| <= 1`` and ``v = |u|`` beyond. Polar angles are
measured from the ``p`` axis: ``p = r cos(theta)``, ``q = r sin(theta)``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import CellCountMismatch, DomainError, OutsideDiagram
from .tableau_core import Cell, RealTableau, StandardTableau, YoungDiagram

R_THETA_TOL = 1e-10


class ScaledPoint(NamedTuple):
    p: float
    q: float


class PolarPoint(NamedTuple):
    r: float
    theta: float


def omega(s: float) -> float:
    if abs(s) > 1:
        raise DomainError(f"omega is defined on [-1, 1], got {s}")
    return 2 / math.pi * (s * math.asin(s) + math.sqrt(1 - s * s))


def omega_prime(s: float) -> float:
    if abs(s) > 1:
        raise DomainError(f"omega is defined on [-1, 1], got {s}")
    return 2 / math.pi * math.asin(s)


def _boundary(u: float) -> float:
    return abs(u) if abs(u) >= 1 else omega(u)


def omega_array(s: np.ndarray) -> np.ndarray:
    """Vectorized boundary curve; equals ``|s|`` outside [-1, 1]."""
    s = np.asarray(s, dtype=float)
    c = np.clip(s, -1.0, 1.0)
    inner = 2 / np.pi * (c * np.arcsin(c) + np.sqrt(1 - c * c))
    return np.where(np.abs(s) >= 1, np.abs(s), inner)


def to_rotated(pt: ScaledPoint) -> tuple[float, float]:
    p, q = pt
    return (q - p) / 2, (q + p) / 2


def polar_to_scaled(pt: PolarPoint) -> ScaledPoint:
    return ScaledPoint(pt.r * math.cos(pt.theta), pt.r * math.sin(pt.theta))


def _check_theta(theta: float) -> None:
    if not 0 < theta < math.pi / 2:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta}")


@lru_cache(maxsize=4096)
def r_theta(theta: float) -> float:
    """Distance from the origin to the limit boundary along angle ``theta``."""
    _check_theta(theta)
    c, s = math.cos(theta), math.sin(theta)

    def gap(r: float) -> float:
        u, v = (r * s - r * c) / 2, (r * s + r * c) / 2
        return v - _boundary(u)

    lo, hi = 0.0, 4.0
    while hi - lo > R_THETA_TOL:
        mid = (lo + hi) / 2
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def arch(pt: PolarPoint) -> float:
    r, theta = pt
    rt = r_theta(theta)
    if r < 0 or r > rt + 1e-9:
        raise DomainError(f"r = {r} lies outside [0, r_theta = {rt}]")
    return min(r * r / (rt * rt), 1.0)


# -- scaled step functions -------------------------------------------------


def cell_at(n: int, pt: ScaledPoint) -> Cell:
    """Cell of an ``n``-cell diagram that contains the scaled point."""
    scale = math.sqrt(n)
    return Cell(math.floor(pt.p * scale) + 1, math.floor(pt.q * scale) + 1)


def _lookup(tab, n: int, pt: ScaledPoint):
    if pt.p < 0 or pt.q < 0:
        raise OutsideDiagram(f"{pt} has a negative coordinate")
    cell = cell_at(n, pt)
    v = tab.get(cell)
    if v is None:
        raise OutsideDiagram(f"{pt} maps to {cell}, outside the diagram")
    return v


def phi_eval(p_tab: RealTableau, n: int, pt: ScaledPoint) -> float:
    return _lookup(p_tab, n, pt)


def psi_eval(q_tab: StandardTableau, n: int, pt: ScaledPoint) -> float:
    return _lookup(q_tab, n, pt) / n


def ray_cells(d: YoungDiagram, theta: float) -> list[Cell]:
    """Cells of ``d`` crossed by the ray from the corner at angle ``theta``,
    in order of distance, stopping at the first cell outside ``d``."""
    _check_theta(theta)
    c, s = math.cos(theta), math.sin(theta)
    i, j = 1, 1
    out = []
    while (i, j) in d:
        out.append(Cell(i, j))
        # next crossing: row boundary at p = i or column boundary at q = j
        if i / c < j / s:
            i += 1
        else:
            j += 1
    return out


# -- boundary of a scaled diagram ------------------------------------------


def boundary_polygon(d: YoungDiagram, n: int) -> np.ndarray:
    """Outer staircase of ``d`` as (p, q) vertices, from the bottom of the
    first column to the end of the first row, scaled by ``1/sqrt(n)``."""
    rows = d.rows
    pts = [(len(rows), 0)]
    for i in range(len(rows), 0, -1):
        pts.append((i, rows[i - 1]))
        pts.append((i - 1, rows[i - 1]))
    return np.asarray(pts, dtype=float) / math.sqrt(n)


def profile_distance(d: YoungDiagram, n: int, grid_points: int = 401) -> float:
    """Sup over ``u`` in [-0.95, 0.95] of ``|v_d(u) - omega(u)|``."""
    if d.n != n:
        raise CellCountMismatch(f"diagram has {d.n} cells, expected {n}")
    poly = boundary_polygon(d, n)
    u_d = (poly[:, 1] - poly[:, 0]) / 2
    v_d = (poly[:, 1] + poly[:, 0]) / 2
    u = np.linspace(-0.95, 0.95, max(grid_points, 200))
    profile = np.interp(u, u_d, v_d, left=np.nan, right=np.nan)
    profile = np.where(np.isnan(profile), np.abs(u), profile)
    return float(np.max(np.abs(profile - omega_array(u))))
