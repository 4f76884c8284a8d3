"""Command-line front end.

    tableau-codec rsk encode --input FILE|- [--emit p,q]
    tableau-codec weyl encode --input FILE|-
    tableau-codec weyl decode --n N --seed S [--trials T]
    tableau-codec nerve show --tableau FILE
    tableau-codec decode nerve --n N --trials T --seed S [--kappa K]
    tableau-codec shape omega --samples K
    tableau-codec shape arch --grid R,T
    tableau-codec experiment decode|shape|arch|arrival|fluct --n N --trials T --seed S
        [--out PATH] [--format csv|json] [--check]

Tabular output is CSV with a header row. Floats are written with ``repr``
so reruns are byte-identical; missing measurements are empty fields.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, Optional, Sequence

from . import experiments as ex
from .errors import ConfigError, TableauError
from .limit_shape import PolarPoint, arch, omega, r_theta
from .rsk import recording_tableau, rsk
from .schuetzenberger import nerve
from .tableau_core import dumps_tableau, loads_tableau
from .weyl import encode_weyl

EXIT_CONFIG = 2
EXIT_VIOLATION = 1


def _fmt(v) -> str:
    if v is None:
        return ""
    return repr(float(v)) if isinstance(v, float) else str(v)


def write_csv(stream, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])


def _read_reals(path: str) -> list[float]:
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        return [float(tok) for tok in text.split()]
    except ValueError as exc:
        raise ConfigError(f"input is not a list of reals: {exc}") from None


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise ConfigError(f"--{name} must be positive, got {value}")


# -- subcommands -----------------------------------------------------------


def cmd_rsk_encode(args, out) -> int:
    pair = rsk(_read_reals(args.input))
    parts = [s.strip().lower() for s in args.emit.split(",") if s.strip()]
    bad = set(parts) - {"p", "q"}
    if bad or not parts:
        raise ConfigError(f"--emit takes p, q or p,q; got {args.emit!r}")
    for part in parts:
        out.write(dumps_tableau(pair.p if part == "p" else pair.q) + "\n")
    return 0


def cmd_weyl_encode(args, out) -> int:
    out.write(" ".join(map(str, encode_weyl(_read_reals(args.input)))) + "\n")
    return 0


def cmd_weyl_decode(args, out) -> int:
    records = ex.run_weyl_experiment(args.n, args.trials, args.seed)
    write_csv(out, ["x1", "estimate", "abs_error"], ([r.measurements[k] for k in ("x1", "estimate", "abs_error")] for r in records))
    return 0


def cmd_nerve_show(args, out) -> int:
    with open(args.tableau) as fh:
        t = loads_tableau(fh.read())
    nv = nerve(t)
    out.write(json.dumps({"cells": [list(c) for c in nv.cells], "values": list(nv.values), "end": list(nv.end)}) + "\n")
    return 0


def cmd_decode_nerve(args, out) -> int:
    _positive("n", args.n)
    _positive("trials", args.trials)
    if args.kappa <= 0:
        raise ConfigError(f"--kappa must be positive, got {args.kappa}")
    rows = []
    root = math.sqrt(args.n)
    for t in range(args.trials):
        x = ex.sample_realization(args.seed, args.n, t).tolist()
        a1, a2 = nerve(recording_tableau(x)).end
        rows.append((t, x[0], a1, a2, min(1.0, max(0.0, args.kappa * a1 / root))))
    write_csv(out, ["trial", "x1", "a1", "a2", "estimate"], rows)
    return 0


def cmd_shape_omega(args, out) -> int:
    if args.samples < 2:
        raise ConfigError("--samples must be at least 2")
    k = args.samples
    ss = [-1 + 2 * i / (k - 1) for i in range(k)]
    write_csv(out, ["s", "omega"], ((s, omega(s)) for s in ss))
    return 0


def _parse_grid(spec: str) -> tuple[int, int]:
    try:
        r, t = (int(v) for v in spec.split(","))
    except ValueError:
        raise ConfigError(f"--grid expects R,T as two integers, got {spec!r}") from None
    if r < 1 or t < 1:
        raise ConfigError("--grid sizes must be positive")
    return r, t


def cmd_shape_arch(args, out) -> int:
    nr, nt = _parse_grid(args.grid)
    rows = []
    for j in range(1, nt + 1):
        theta = j * (math.pi / 2) / (nt + 1)
        rt = r_theta(theta)
        for i in range(nr + 1):
            r = rt * i / nr
            rows.append((r, theta, arch(PolarPoint(r, theta))))
    write_csv(out, ["r", "theta", "A"], rows)
    return 0


EXPERIMENTS = {
    "decode": lambda a: ex.run_decoding_experiment(a.n, a.trials, a.seed, kappa=a.kappa),
    "shape": lambda a: ex.run_shape_experiment(a.n, a.trials, a.seed),
    "arch": lambda a: ex.run_arch_experiment(a.n, a.trials, a.seed),
    "arrival": lambda a: ex.run_arrival_experiment(a.n, a.trials, a.seed, max_steps=a.max_steps),
    "fluct": lambda a: ex.run_fluctuation_sampling(a.n, a.trials, a.seed),
}


def records_to_csv(records: Sequence[ex.TrialRecord], stream) -> None:
    names: list[str] = []
    for r in records:
        for k in r.measurements:
            if k not in names:
                names.append(k)
    rows = ([r.seed, r.n, r.trial] + [r.measurements.get(k) for k in names] for r in records)
    write_csv(stream, ["seed", "n", "trial"] + names, rows)


def cmd_experiment(args, out) -> int:
    if args.check:
        failed = [name for name, ok in ex.invariant_suite(args.seed) if not ok]
        if failed:
            print("invariant violation: " + ", ".join(failed), file=sys.stderr)
            return EXIT_VIOLATION
    records = EXPERIMENTS[args.kind](args)
    buf = io.StringIO()
    if args.format == "json":
        json.dump([r.to_dict() for r in records], buf, indent=1)
        buf.write("\n")
    else:
        records_to_csv(records, buf)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tableau-codec", description="RSK and rank codecs for i.i.d. sequences.")
    top = parser.add_subparsers(dest="group", required=True)

    g = top.add_parser("rsk").add_subparsers(dest="action", required=True)
    p = g.add_parser("encode", help="P and Q tableaux of a real sequence")
    p.add_argument("--input", required=True, help="file of whitespace-separated reals, or -")
    p.add_argument("--emit", default="p,q")
    p.set_defaults(func=cmd_rsk_encode)

    g = top.add_parser("weyl").add_subparsers(dest="action", required=True)
    p = g.add_parser("encode", help="prefix ranks z_k")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_weyl_encode)
    p = g.add_parser("decode", help="rank-statistic estimate of x1 on sampled input")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.set_defaults(func=cmd_weyl_decode)

    g = top.add_parser("nerve").add_subparsers(dest="action", required=True)
    p = g.add_parser("show", help="nerve of a standard tableau in JSON form")
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=cmd_nerve_show)

    g = top.add_parser("decode").add_subparsers(dest="action", required=True)
    p = g.add_parser("nerve", help="nerve-endpoint estimate of x1 on sampled input")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kappa", type=float, default=1.0)
    p.set_defaults(func=cmd_decode_nerve)

    g = top.add_parser("shape").add_subparsers(dest="action", required=True)
    p = g.add_parser("omega", help="samples of the limit curve")
    p.add_argument("--samples", type=int, required=True)
    p.set_defaults(func=cmd_shape_omega)
    p = g.add_parser("arch", help="arch values on an R x T polar grid")
    p.add_argument("--grid", required=True, help="R,T: radial steps and number of angles")
    p.set_defaults(func=cmd_shape_arch)

    p = top.add_parser("experiment", help="seeded Monte Carlo runs")
    p.add_argument("kind", choices=sorted(EXPERIMENTS))
    p.add_argument("--n", type=int, required=True, help="size; for arrival, the tracked index m")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--check", action="store_true", help="run the invariant suite first")
    p.add_argument("--kappa", type=float, default=1.0, help="decode only")
    p.add_argument("--max-steps", type=int, default=None, help="arrival only")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TableauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
