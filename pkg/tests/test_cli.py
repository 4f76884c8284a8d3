from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from tableau_codec import experiments
from tableau_codec.cli import main
from tableau_codec.tableau_core import StandardTableau, loads_tableau


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_rsk_encode_stdin(monkeypatch):
    code, text = run(["rsk", "encode", "--input", "-"], "0.6 0.2\n0.9", monkeypatch)
    assert code == 0
    p, q = text.strip().splitlines()
    assert json.loads(p) == {"shape": [2, 1], "rows": [[0.2, 0.9], [0.6]]}
    assert loads_tableau(q) == StandardTableau([[1, 3], [2]])


def test_rsk_encode_emit_q(tmp_path):
    f = tmp_path / "x.txt"
    f.write_text("0.3 0.1")
    code, text = run(["rsk", "encode", "--input", str(f), "--emit", "q"])
    assert code == 0 and text.strip() == '{"shape": [1, 1], "rows": [[1], [2]]}'
    assert run(["rsk", "encode", "--input", str(f), "--emit", "z"])[0] == 2


def test_rsk_encode_bad_input(monkeypatch):
    assert run(["rsk", "encode", "--input", "-"], "0.1 abc", monkeypatch)[0] == 2
    assert run(["rsk", "encode", "--input", "-"], "0.1 0.1", monkeypatch)[0] == 2


def test_weyl_commands(monkeypatch):
    assert run(["weyl", "encode", "--input", "-"], "0.3 0.7 0.1", monkeypatch)[1] == "1 2 1\n"
    code, text = run(["weyl", "decode", "--n", "1000", "--seed", "3", "--trials", "4"])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0] == ["x1", "estimate", "abs_error"] and len(rows) == 5


def test_nerve_commands(tmp_path):
    f = tmp_path / "t.json"
    f.write_text('{"shape": [3, 2, 1], "rows": [[1, 2, 5], [3, 4], [6]]}')
    code, text = run(["nerve", "show", "--tableau", str(f)])
    assert code == 0
    assert json.loads(text) == {"cells": [[1, 1], [1, 2], [2, 2]], "values": [1, 2, 4], "end": [2, 2]}
    code, text = run(["decode", "nerve", "--n", "400", "--trials", "3", "--seed", "1", "--kappa", "0.64"])
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["trial", "x1", "a1", "a2", "estimate"] and len(rows) == 4
    assert run(["decode", "nerve", "--n", "10", "--trials", "1", "--seed", "1", "--kappa", "0"])[0] == 2


def test_shape_commands():
    code, text = run(["shape", "omega", "--samples", "5"])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0] == ["s", "omega"] and rows[4][0] == "0.5"
    code, text = run(["shape", "arch", "--grid", "4,3"])
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["r", "theta", "A"] and len(rows) == 1 + 3 * 5
    assert float(rows[5][2]) == pytest.approx(1.0)
    assert run(["shape", "arch", "--grid", "4"])[0] == 2


@pytest.mark.parametrize("kind", ["decode", "shape", "arch", "arrival", "fluct"])
def test_experiment_csv_and_json(kind, tmp_path):
    n = "4" if kind == "arrival" else "100"
    out = tmp_path / "o.csv"
    assert main(["experiment", kind, "--n", n, "--trials", "3", "--seed", "9", "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0][:3] == ["seed", "n", "trial"] and len(rows) > 1
    code, text = run(["experiment", kind, "--n", n, "--trials", "2", "--seed", "9", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and {"seed", "n", "trial", "measurements"} <= set(data[0])


def test_experiment_config_error():
    assert main(["experiment", "shape", "--n", "0", "--trials", "3", "--seed", "1"]) == 2
    assert main(["experiment", "arrival", "--n", "10", "--trials", "1", "--seed", "1", "--max-steps", "3"]) == 2


def test_check_flag(monkeypatch):
    code, _ = run(["experiment", "shape", "--n", "50", "--trials", "1", "--seed", "1", "--check"])
    assert code == 0
    monkeypatch.setattr(experiments, "invariant_suite", lambda seed: [("broken", False)])
    code, _ = run(["experiment", "shape", "--n", "50", "--trials", "1", "--seed", "1", "--check"])
    assert code != 0


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "tableau_codec", "shape", "omega", "--samples", "3"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.splitlines()[0] == "s,omega"
