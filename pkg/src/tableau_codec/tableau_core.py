"""Young diagrams and tableaux as immutable values.

Indices are 1-based everywhere: the corner cell is ``Cell(1, 1)``, rows grow
downward and columns grow to the right (English notation).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import DuplicateValue, InvalidDiagram, InvalidTableau

Realization = Sequence[float]


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise InvalidDiagram(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidDiagram(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, cell: object) -> bool:
        row, col = cell  # type: ignore[misc]
        return 1 <= row <= len(self.rows) and 1 <= col <= self.rows[row - 1]

    def conjugate(self) -> YoungDiagram:
        if not self.rows:
            return YoungDiagram()
        return YoungDiagram(tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0])))

    def outer_corners(self) -> list[Cell]:
        """Cells whose removal leaves a valid diagram."""
        out = []
        for i, r in enumerate(self.rows):
            below = self.rows[i + 1] if i + 1 < len(self.rows) else 0
            if r > below:
                out.append(Cell(i + 1, r))
        return out


def cell_count(d: YoungDiagram) -> int:
    return d.n


class _Tableau:
    """Shared read-only behaviour for the two tableau flavours."""

    rows: tuple[tuple, ...]

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, cell: tuple[int, int]):
        row, col = cell
        if row < 1 or col < 1:
            raise IndexError(cell)
        return self.rows[row - 1][col - 1]

    def get(self, cell: tuple[int, int], default=None):
        row, col = cell
        if 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1]):
            return self.rows[row - 1][col - 1]
        return default

    def cells(self) -> Iterator[tuple[Cell, object]]:
        for i, row in enumerate(self.rows, 1):
            for j, v in enumerate(row, 1):
                yield Cell(i, j), v

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)


@dataclass(frozen=True)
class StandardTableau(_Tableau):
    """Bijective filling of a diagram by 1..n.

    Construction does not validate; use :func:`validate_standard`.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))

    def find(self, value: int) -> Cell:
        for i, row in enumerate(self.rows, 1):
            for j, v in enumerate(row, 1):
                if v == value:
                    return Cell(i, j)
        raise KeyError(value)


@dataclass(frozen=True)
class RealTableau(_Tableau):
    """Filling by distinct reals; duplicates are rejected at construction."""

    rows: tuple[tuple[float, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(float(v) for v in r) for r in self.rows)
        flat = [v for r in rows for v in r]
        if len(set(flat)) != len(flat):
            raise DuplicateValue("tableau entries must be pairwise distinct")
        object.__setattr__(self, "rows", rows)


Tableau = Union[StandardTableau, RealTableau]


def _is_shape(rows: Sequence[Sequence]) -> bool:
    lengths = [len(r) for r in rows]
    return all(x > 0 for x in lengths) and all(a >= b for a, b in zip(lengths, lengths[1:]))


def _rows_and_columns_increase(rows: Sequence[Sequence]) -> bool:
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def validate_standard(t: StandardTableau) -> bool:
    rows = t.rows
    if not _is_shape(rows):
        return False
    n = sum(len(r) for r in rows)
    if sorted(v for r in rows for v in r) != list(range(1, n + 1)):
        return False
    return _rows_and_columns_increase(rows)


def validate_real(t: RealTableau) -> bool:
    rows = t.rows
    if not _is_shape(rows):
        return False
    flat = [v for r in rows for v in r]
    if len(set(flat)) != len(flat):
        return False
    if any(not (0.0 <= v <= 1.0) or math.isnan(v) for v in flat):
        return False
    return _rows_and_columns_increase(rows)


def transpose(t: Tableau) -> Tableau:
    """Reflect along the main diagonal: cell (i, j) goes to (j, i)."""
    if not t.rows:
        return type(t)()
    width = len(t.rows[0])
    cols = tuple(tuple(r[j] for r in t.rows if len(r) > j) for j in range(width))
    return type(t)(cols)


def check_realization(x: Realization) -> tuple[float, ...]:
    """Return ``x`` as a tuple of floats, rejecting ties."""
    values = tuple(float(v) for v in x)
    if len(set(values)) != len(values):
        raise DuplicateValue("realization values must be pairwise distinct")
    return values


# -- serialization ---------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, int):
        return str(v)
    s = "%.17g" % v
    # keep reals distinguishable from integer entries on reload
    if not any(c in s for c in ".eEn"):
        s += ".0"
    return s


def dumps_tableau(t: Tableau) -> str:
    """Canonical JSON text: ``{"shape": [...], "rows": [[...], ...]}``.

    Reals are written with 17 significant digits so that parsing restores
    the exact double.
    """
    shape = ", ".join(str(len(r)) for r in t.rows)
    rows = ", ".join("[" + ", ".join(_fmt(v) for v in r) + "]" for r in t.rows)
    return '{"shape": [%s], "rows": [%s]}' % (shape, rows)


def tableau_from_obj(obj: dict) -> Tableau:
    rows = obj["rows"]
    shape = [int(s) for s in obj.get("shape", [len(r) for r in rows])]
    if shape != [len(r) for r in rows]:
        raise InvalidTableau(f"declared shape {shape} does not match rows")
    if all(isinstance(v, int) for r in rows for v in r):
        return StandardTableau(rows)
    return RealTableau(rows)


def loads_tableau(text: str) -> Tableau:
    return tableau_from_obj(json.loads(text))
