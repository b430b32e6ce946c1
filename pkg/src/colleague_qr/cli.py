"""Command-line front end.

Exit codes: 0 success, 1 usage / I-O / parse error, 2 numerical failure
(no convergence or a non-finite intermediate).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import bench as _bench
from .chebyshev import read_coefficients
from .experiments import CSV_COLUMNS, EXPERIMENTS, rows_to_csv, table_rows
from .generators import HessGenerators, colleague_plus_rank1
from .oracle import OracleConvergenceError, OracleOptions, dense_eig
from .qr_driver import ConvergenceError, EigOptions, eig
from .rootfinder import SOLVERS, find_roots
from .sweep import BreakdownError

__all__ = ["RunConfig", "main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2
NUMERIC_ERRORS = (ConvergenceError, BreakdownError, OracleConvergenceError)

EPILOG = f"""\
CSV schemas
  experiment: {",".join(CSV_COLUMNS)}
      one row per (polynomial, solver); 'sample' is the seed index for the
      rand family and empty otherwise.
  bench:      {",".join(_bench.BENCH_COLUMNS)}
      median wall-clock seconds; dense_seconds is empty above --dense-max.
  roots --format csv: root,eta,kappa (one row per real root)

exit codes: 0 ok, 1 usage or I/O error, 2 numerical failure
"""


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    solver: str = "structured"
    delta: float = 1e-3
    epsilon_override: float | None = None
    seed: int = 0
    format: str = "json"

    def __post_init__(self):
        if self.command not in ("roots", "eig", "experiment", "bench"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.solver not in SOLVERS:
            raise ValueError(f"unknown solver {self.solver!r}")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if self.epsilon_override is not None and not self.epsilon_override > 0:
            raise ValueError("epsilon must be positive")

    @property
    def eig_options(self) -> EigOptions:
        return EigOptions(epsilon=self.epsilon_override)


def _sizes(text: str):
    try:
        sizes = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not sizes or any(n < 1 for n in sizes) or sizes != sorted(sizes):
        raise argparse.ArgumentTypeError("sizes must be positive and ascending")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="colleague-qr",
        description="Chebyshev rootfinding via structured QR on colleague matrices.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="real roots of a Chebyshev series with eta certificates")
    r.add_argument("--input", required=True, help="coefficients a_0..a_n, one per line, or JSON {\"coeffs\": [...]}")
    r.add_argument("--solver", choices=SOLVERS, default="structured")
    r.add_argument("--delta", type=float, default=1e-3, help="half-width of the root rectangle")
    r.add_argument("--epsilon", type=float, default=None, help="override the deflation tolerance")
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--output", default=None)

    e = sub.add_parser("eig", help="eigenvalues of a generator JSON file")
    e.add_argument("--input", required=True, help="JSON with d, beta, p, q (complex as [re, im])")
    e.add_argument("--solver", choices=SOLVERS, default="structured")
    e.add_argument("--epsilon", type=float, default=None)
    e.add_argument("--output", default=None)

    x = sub.add_parser("experiment", help="regenerate one experiment table as CSV")
    x.add_argument("name", choices=EXPERIMENTS)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--output", default=None)

    b = sub.add_parser("bench", help="timings of structured vs dense solvers as CSV")
    b.add_argument("--sizes", type=_sizes, required=True, help="ascending comma-separated sizes")
    b.add_argument("--reps", type=int, default=3, help="repetitions per size (median reported; >= 3)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--dense-max", type=int, default=None, help="skip the dense solver above this size")
    b.add_argument("--output", default=None)
    return ap


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_roots(cfg: RunConfig) -> int:
    s = read_coefficients(cfg.input_path)
    rep = find_roots(s, cfg.delta, cfg.eig_options, cfg.solver)
    if cfg.format == "json":
        text = json.dumps(rep.to_dict(), indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("root", "eta", "kappa"))
        for x, e, k in zip(rep.real_roots, rep.eta, rep.kappa):
            w.writerow((repr(float(x)), repr(float(e)), repr(float(k))))
        text = buf.getvalue()
    _emit(text, cfg.output_path)
    return EXIT_OK


def cmd_eig(cfg: RunConfig) -> int:
    with open(cfg.input_path) as fh:
        g = HessGenerators.from_json(fh.read())
    if cfg.solver == "structured":
        lam = eig(g, cfg.eig_options).eigenvalues
    else:
        lam = dense_eig(colleague_plus_rank1(g), OracleOptions(balance=cfg.solver == "dense"))
    out = {"n": g.n, "solver": cfg.solver,
           "eigenvalues": [[float(z.real), float(z.imag)] for z in np.asarray(lam)]}
    _emit(json.dumps(out, indent=2) + "\n", cfg.output_path)
    return EXIT_OK


def cmd_experiment(name: str, cfg: RunConfig) -> int:
    rows = table_rows(name, solvers=("structured", "dense-nobalance"), seed=cfg.seed)
    _emit(rows_to_csv(rows), cfg.output_path)
    return EXIT_OK


def cmd_bench(sizes, cfg: RunConfig, reps: int = 3, dense_max=None) -> int:
    rows = _bench.bench_rows(sizes, reps=reps, seed=cfg.seed, dense_max=dense_max)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_bench.BENCH_COLUMNS)
    for n, ts, td in rows:
        w.writerow((n, f"{ts:.6g}", "" if td is None else f"{td:.6g}"))
    _emit(buf.getvalue(), cfg.output_path)
    return EXIT_OK


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; we reserve 2
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(
            command=args.command,
            input_path=getattr(args, "input", None),
            output_path=getattr(args, "output", None),
            solver=getattr(args, "solver", "structured"),
            delta=getattr(args, "delta", 1e-3),
            epsilon_override=getattr(args, "epsilon", None),
            seed=getattr(args, "seed", 0),
            format=getattr(args, "format", "json"),
        )
        if args.command == "roots":
            return cmd_roots(cfg)
        if args.command == "eig":
            return cmd_eig(cfg)
        if args.command == "experiment":
            return cmd_experiment(args.name, cfg)
        if args.reps < 3:
            raise ValueError("--reps must be at least 3")
        return cmd_bench(args.sizes, cfg, args.reps, args.dense_max)
    except NUMERIC_ERRORS as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
