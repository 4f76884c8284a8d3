from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import realizations, standard_tableaux

from tableau_codec.errors import DuplicateValue, InvalidDiagram, InvalidTableau
from tableau_codec.tableau_core import (
    Cell,
    RealTableau,
    StandardTableau,
    YoungDiagram,
    cell_count,
    check_realization,
    dumps_tableau,
    loads_tableau,
    transpose,
    validate_real,
    validate_standard,
)


@pytest.mark.parametrize(
    "rows, ok",
    [([[1, 2], [3]], True), ([[1, 3], [2]], True), ([[2, 1], [3]], False), ([], True), ([[1], [2, 3]], False),
     ([[1, 2], [2]], False), ([[1, 4], [2]], False)],
)
def test_validate_standard(rows, ok):
    assert validate_standard(StandardTableau(rows)) is ok


def test_validate_real():
    assert validate_real(RealTableau([[0.1, 0.5], [0.3]]))
    assert not validate_real(RealTableau([[0.5, 0.1]]))
    assert not validate_real(RealTableau([[0.1, 0.5], [0.05]]))
    assert not validate_real(RealTableau([[0.1, 1.5]]))
    with pytest.raises(DuplicateValue):
        RealTableau([[0.1, 0.2], [0.2]])


@pytest.mark.parametrize(
    "rows, expected",
    [([[1, 2, 3]], [[1], [2], [3]]), ([[1, 2], [3]], [[1, 3], [2]]), ([], [])],
)
def test_transpose_examples(rows, expected):
    assert transpose(StandardTableau(rows)) == StandardTableau(expected)


@given(standard_tableaux())
def test_transpose_involution_and_validity(rows):
    t = StandardTableau(rows)
    tt = transpose(t)
    assert validate_standard(t)
    assert validate_standard(tt)
    assert tt.shape == t.shape.conjugate()
    assert cell_count(tt.shape) == cell_count(t.shape)
    assert transpose(tt) == t


@given(standard_tableaux())
def test_neighbors_larger(rows):
    t = StandardTableau(rows)
    for cell, v in t.cells():
        for nb in (Cell(cell.row, cell.col + 1), Cell(cell.row + 1, cell.col)):
            if nb in t.shape:
                assert t[nb] > v


@pytest.mark.parametrize("rows, n", [((), 0), ((3, 2), 5), ((2, 2, 1), 5)])
def test_cell_count(rows, n):
    assert cell_count(YoungDiagram(rows)) == n


def test_diagram_rejects_bad_rows():
    with pytest.raises(InvalidDiagram):
        YoungDiagram((1, 2))
    with pytest.raises(InvalidDiagram):
        YoungDiagram((2, 0))


def test_diagram_geometry():
    d = YoungDiagram((3, 1))
    assert Cell(1, 3) in d and Cell(2, 1) in d
    assert Cell(2, 2) not in d and Cell(0, 1) not in d
    assert d.conjugate() == YoungDiagram((2, 1, 1))
    assert d.outer_corners() == [Cell(1, 3), Cell(2, 1)]


def test_lookup():
    t = StandardTableau([[1, 2, 5], [3, 4], [6]])
    assert t[Cell(2, 2)] == 4
    assert t.get(Cell(3, 2)) is None
    assert t.find(5) == Cell(1, 3)


def test_check_realization():
    assert check_realization([0.5, 0.25]) == (0.5, 0.25)
    with pytest.raises(DuplicateValue):
        check_realization([0.5, 0.5])


def test_serialization_format():
    text = dumps_tableau(StandardTableau([[1, 3], [2]]))
    assert json.loads(text) == {"shape": [2, 1], "rows": [[1, 3], [2]]}
    assert loads_tableau(text) == StandardTableau([[1, 3], [2]])


@given(realizations(1, 20))
def test_real_round_trip_exact(xs):
    xs = sorted(xs)
    t = RealTableau([xs])
    back = loads_tableau(dumps_tableau(t))
    assert isinstance(back, RealTableau)
    assert back == t


def test_integral_reals_stay_real():
    t = RealTableau([[0.5, 1.0]])
    assert isinstance(loads_tableau(dumps_tableau(t)), RealTableau)


def test_shape_declaration_checked():
    with pytest.raises(InvalidTableau):
        loads_tableau('{"shape": [1], "rows": [[1, 2]]}')


@given(st.lists(st.integers(1, 6), max_size=6).map(lambda r: sorted(r, reverse=True)))
def test_conjugate_involution(rows):
    d = YoungDiagram(tuple(rows))
    assert d.conjugate().conjugate() == d
    assert d.conjugate().n == d.n
