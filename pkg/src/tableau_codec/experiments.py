"""Seeded Monte Carlo drivers.

Every experiment is a pure function of its configuration. Trial ``t`` of a
run with master seed ``s`` draws its input from a Philox stream keyed by
``(s, t)``, so trials can be computed in any order or in parallel and still
reproduce bit for bit.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from ._kernels import arrival_step_fast
from .errors import ConfigError, IndexOutOfRange, InvariantViolation
from .limit_shape import (
    PolarPoint,
    arch,
    cell_at,
    polar_to_scaled,
    profile_distance,
    r_theta,
    ray_cells,
)
from .rsk import _rsk_lists, bump, recording_tableau
from .schuetzenberger import nerve_endpoint, sch_shift
from .tableau_core import Cell, Realization, StandardTableau, YoungDiagram
from .weyl import decode_first_weyl, encode_weyl

Measurement = Optional[float]


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    n: int
    trial: int
    measurements: dict[str, Measurement] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "n": self.n, "trial": self.trial, "measurements": dict(self.measurements)}


@dataclass(frozen=True)
class EntryPath:
    steps: tuple[tuple[int, Cell], ...]

    def is_monotone(self) -> bool:
        cells = [c for _, c in self.steps]
        return all(b.col <= a.col and b.row >= a.row for a, b in zip(cells, cells[1:]))


# -- sampling --------------------------------------------------------------


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, trial])))


def sample_realization(seed: int, n: int, trial: int = 0) -> np.ndarray:
    """``n`` i.i.d. uniform values in (0, 1), pairwise distinct."""
    if n < 1:
        raise ConfigError(f"n must be positive, got {n}")
    rng = trial_rng(seed, trial)
    x = rng.random(n)
    while True:
        bad = x == 0.0
        _, first = np.unique(x, return_index=True)
        dup = np.ones(n, dtype=bool)
        dup[first] = False
        bad |= dup
        if not bad.any():
            return x
        x[bad] = rng.random(int(bad.sum()))


# -- P-tableau dynamics ----------------------------------------------------


def _check_index(x: Sequence[float], m: int) -> None:
    if not 1 <= m <= len(x):
        raise IndexOutOfRange(f"m = {m} is outside 1..{len(x)}")


def _tracked_insertions(x: Sequence[float], m: int):
    """Yield ``(k, (row, col))`` for k >= m: 0-based cell of ``x[m]`` in P(x^k)."""
    p: list[list[float]] = []
    pos = None
    for k, v in enumerate(x, 1):
        carried = k == m
        r = 0
        while True:
            if r == len(p):
                p.append([v])
                if carried:
                    pos = (r, 0)
                break
            row = p[r]
            j = bisect_right(row, v)
            if j == len(row):
                row.append(v)
                if carried:
                    pos = (r, j)
                break
            if carried:
                pos = (r, j)
                carried = False
            elif pos == (r, j):
                carried = True
            row[j], v = v, row[j]
            r += 1
        if pos is not None:
            yield k, pos


def trace_entry(x: Realization, m: int) -> EntryPath:
    """Cell holding ``x[m]`` in each insertion tableau P(x^k), k >= m."""
    _check_index(x, m)
    return EntryPath(tuple((k, Cell(r + 1, c + 1)) for k, (r, c) in _tracked_insertions(x, m)))


def arrival_step(x: Realization, m: int) -> Optional[int]:
    """First k with ``x[m]`` in column 1 of P(x^k); None if the prefix ends first."""
    _check_index(x, m)
    for k, (_, c) in _tracked_insertions(x, m):
        if c == 0:
            return k
    return None


def run_min_check(x: Realization) -> bool:
    """The corner of P(x^k) holds min(x1..xk) for every k."""
    p: list[list[float]] = []
    running = math.inf
    for v in x:
        bump(p, v)
        running = min(running, v)
        if p[0][0] != running:
            return False
    return True


# -- experiments -----------------------------------------------------------


def _check_sizes(n: int, trials: int, min_n: int = 1) -> None:
    if n < min_n:
        raise ConfigError(f"n must be at least {min_n}, got {n}")
    if trials < 1:
        raise ConfigError(f"trials must be positive, got {trials}")


def run_weyl_experiment(n: int, trials: int, seed: int) -> list[TrialRecord]:
    """Rank-code decoding error of the first coordinate."""
    _check_sizes(n, trials)
    out = []
    for t in range(trials):
        x = sample_realization(seed, n, t)
        est = decode_first_weyl(encode_weyl(x))
        x1 = float(x[0])
        out.append(TrialRecord(seed, n, t, {"x1": x1, "estimate": est, "abs_error": abs(est - x1)}))
    return out


def run_decoding_experiment(
    n: int, trials: int, seed: int, kappa: float = 1.0, check_every: int = 100
) -> list[TrialRecord]:
    """Both decoders on the same realizations, plus the sink position of x1.

    Every ``check_every``-th trial also verifies that the shift of Q(x)
    equals Q of the tail of x.
    """
    _check_sizes(n, trials, min_n=2)
    if kappa <= 0:
        raise ConfigError(f"kappa must be positive, got {kappa}")
    root = math.sqrt(n)
    out = []
    for t in range(trials):
        x = sample_realization(seed, n, t)
        values = x.tolist()
        x1 = values[0]
        weyl = decode_first_weyl(encode_weyl(x))
        p_rows, q_rows = _rsk_lists(values)
        q = StandardTableau(q_rows)
        a1, a2 = nerve_endpoint(q)
        raw = a1 / root
        est = min(1.0, max(0.0, kappa * raw))
        first_col = [row[0] for row in p_rows]
        x1_row = first_col.index(x1) + 1
        if check_every and t % check_every == 0 and sch_shift(q) != recording_tableau(values[1:]):
            raise InvariantViolation(f"shift/recording mismatch in trial {t} (seed {seed})")
        out.append(
            TrialRecord(
                seed,
                n,
                t,
                {
                    "x1": x1,
                    "weyl_estimate": weyl,
                    "weyl_error": abs(weyl - x1),
                    "a1": a1,
                    "a2": a2,
                    "nerve_raw": raw,
                    "nerve_estimate": est,
                    "nerve_error": abs(est - x1),
                    "x1_row": x1_row,
                    "first_col_len": len(first_col),
                    "sink_ratio": x1_row / len(first_col),
                },
            )
        )
    return out


def run_shape_experiment(n: int, trials: int, seed: int) -> list[TrialRecord]:
    _check_sizes(n, trials)
    root = math.sqrt(n)
    out = []
    for t in range(trials):
        p_rows, _ = _rsk_lists(sample_realization(seed, n, t).tolist())
        d = YoungDiagram(tuple(len(r) for r in p_rows))
        out.append(
            TrialRecord(
                seed,
                n,
                t,
                {
                    "profile_distance": profile_distance(d, n),
                    "row_ratio": d.rows[0] / root,
                    "col_ratio": len(d.rows) / root,
                },
            )
        )
    return out


def default_arch_grid(
    thetas: int = 5, fractions: Sequence[float] = (0.1, 0.3, 0.5, 0.7, 0.9)
) -> list[PolarPoint]:
    """``thetas`` equally spaced interior angles times radial fractions of r_theta."""
    grid = []
    for i in range(1, thetas + 1):
        theta = i * (math.pi / 2) / (thetas + 1)
        for f in fractions:
            grid.append(PolarPoint(f * r_theta(theta), theta))
    return grid


def run_arch_experiment(
    n: int, trials: int, seed: int, grid: Optional[Sequence[PolarPoint]] = None
) -> list[TrialRecord]:
    """Deviation of both scaled tableaux from the arch at fixed polar points.

    Grid points that fall outside a realized diagram produce no record.
    """
    _check_sizes(n, trials)
    grid = list(default_arch_grid() if grid is None else grid)
    targets = []
    for g in grid:
        if not 0 < g.theta < math.pi / 2:
            raise ConfigError(f"grid angle {g.theta} is not interior")
        if g.r < 0 or g.r > r_theta(g.theta):
            raise ConfigError(f"grid radius {g.r} exceeds r_theta at angle {g.theta}")
        targets.append((cell_at(n, polar_to_scaled(g)), arch(g)))
    out = []
    for t in range(trials):
        p_rows, q_rows = _rsk_lists(sample_realization(seed, n, t).tolist())
        for idx, (g, (cell, a)) in enumerate(zip(grid, targets)):
            i, j = cell.row - 1, cell.col - 1
            if i >= len(p_rows) or j >= len(p_rows[i]):
                continue
            phi = p_rows[i][j]
            psi = q_rows[i][j] / n
            out.append(
                TrialRecord(
                    seed,
                    n,
                    t,
                    {
                        "grid_index": idx,
                        "r": g.r,
                        "theta": g.theta,
                        "arch": a,
                        "phi": phi,
                        "psi": psi,
                        "phi_error": abs(phi - a),
                        "psi_error": abs(psi - a),
                    },
                )
            )
    return out


def run_arrival_experiment(m: int, trials: int, seed: int, max_steps: Optional[int] = None) -> list[TrialRecord]:
    """Steps until ``x[m]`` first sits in column 1 of the insertion tableau.

    ``n`` in the records is the tracked index ``m``; a trial that has not
    arrived after ``max_steps`` insertions (default ``400 m^2``) reports
    ``arrival`` as None.
    """
    _check_sizes(m, trials)
    horizon = 400 * m * m if max_steps is None else max_steps
    if horizon < m:
        raise ConfigError(f"max_steps ({horizon}) must be at least m ({m})")
    out = []
    for t in range(trials):
        x = sample_realization(seed, horizon, t)
        k = arrival_step_fast(x, m)
        out.append(
            TrialRecord(
                seed,
                m,
                t,
                {
                    "x_m": float(x[m - 1]),
                    "arrived": 0.0 if k is None else 1.0,
                    "arrival": None if k is None else float(k),
                    "scaled_arrival": None if k is None else k / (m * m),
                },
            )
        )
    return out


def boundary_cell(d: YoungDiagram, theta: float) -> Cell:
    """Last cell of ``d`` met by the ray at angle ``theta``."""
    return ray_cells(d, theta)[-1]


def run_fluctuation_sampling(
    n: int, trials: int, seed: int, thetas: Optional[Sequence[float]] = None
) -> list[TrialRecord]:
    """Samples of ``sqrt(n) * (1 - psi_n)`` at the boundary cell of each ray.

    No distribution is fitted; the records are raw data.
    """
    _check_sizes(n, trials)
    thetas = [i * math.pi / 12 for i in range(1, 6)] if thetas is None else list(thetas)
    for th in thetas:
        if not 0 < th < math.pi / 2:
            raise ConfigError(f"angle {th} is not interior")
    root = math.sqrt(n)
    out = []
    for t in range(trials):
        _, q_rows = _rsk_lists(sample_realization(seed, n, t).tolist())
        d = YoungDiagram(tuple(len(r) for r in q_rows))
        for th in thetas:
            cell = boundary_cell(d, th)
            psi = q_rows[cell.row - 1][cell.col - 1] / n
            out.append(
                TrialRecord(
                    seed,
                    n,
                    t,
                    {"theta": th, "row": cell.row, "col": cell.col, "psi": psi, "fluctuation": root * (1 - psi)},
                )
            )
    return out


# -- aggregation -----------------------------------------------------------


def column(records: Iterable[TrialRecord], name: str) -> np.ndarray:
    """Measurement ``name`` across records; missing values are dropped."""
    return np.array([r.measurements[name] for r in records if r.measurements.get(name) is not None], dtype=float)


def median_of(records: Iterable[TrialRecord], name: str) -> float:
    return float(np.median(column(records, name)))


def merge(*runs: Sequence[TrialRecord]) -> list[TrialRecord]:
    """Order-independent union of record lists (sorted by seed, n, trial)."""
    out = [r for run in runs for r in run]
    out.sort(key=lambda r: (r.seed, r.n, r.trial, r.measurements.get("grid_index") or 0, r.measurements.get("theta") or 0))
    return out


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(ys) against log(xs)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


# -- embedded invariants ---------------------------------------------------


def invariant_suite(seed: int = 0) -> list[tuple[str, bool]]:
    """Cheap structural checks run by the CLI ``--check`` flag."""
    from .rsk import inverse_rsk, rsk
    from .weyl import shift_w

    results = []

    def check(name: str, fn: Callable[[], bool]) -> None:
        try:
            ok = bool(fn())
        except Exception:  # a crash is a violation, not a harness failure
            ok = False
        results.append((name, ok))

    xs = [sample_realization(seed, 2 + t % 40, t) for t in range(200)]
    check("rsk_round_trip", lambda: all(inverse_rsk(rsk(x)) == tuple(x.tolist()) for x in xs))
    check("shift_conjugacy", lambda: all(sch_shift(recording_tableau(x)) == recording_tableau(x[1:]) for x in xs))
    check("weyl_conjugacy", lambda: all(shift_w(encode_weyl(x)) == encode_weyl(x[1:]) for x in xs))
    check("running_min", lambda: all(run_min_check(x.tolist()) for x in xs))
    check(
        "entry_paths_monotone",
        lambda: all(trace_entry(x.tolist(), 1 + t % len(x)).is_monotone() for t, x in enumerate(xs)),
    )
    return results
