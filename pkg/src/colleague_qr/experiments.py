"""Test polynomial families and the experiment tables built from them.

Every family except ``rand`` is deterministic. ``rand`` draws coefficients
from ``numpy.random.Generator(PCG64(SeedSequence([seed, index])))`` with
standard normal variates from ``Generator.standard_normal`` (ziggurat), so a
given ``(seed, index)`` pair always yields the same polynomial.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .chebyshev import ChebSeries, chebyshev_points, interpolate, trim
from .rootfinder import find_roots

__all__ = [
    "TableRow",
    "CSV_COLUMNS",
    "wilkinson",
    "multiple_root",
    "f_sin",
    "yuji",
    "random_coefficients",
    "sample_series",
    "table_rows",
    "rows_to_csv",
    "EXPERIMENTS",
]

CSV_COLUMNS = ("experiment", "solver", "degree", "n", "sample", "coeff_norm", "n_roots",
               "max_abs_eigenvalue", "max_eta")


def sample_series(f, n: int) -> ChebSeries:
    """Order-``n`` Chebyshev interpolant of ``f`` (``n + 1`` extrema samples)."""
    return trim(interpolate(f(chebyshev_points(n))))


def wilkinson(m: int):
    """``prod_i (x - (2i/(m+1) - 1))``, ``i = 1..m``."""
    nodes = 2.0 * np.arange(1, m + 1) / (m + 1) - 1.0

    def f(x):
        x = np.asarray(x, dtype=float)
        return np.prod(x[..., None] - nodes, axis=-1)

    f.roots = nodes
    return f


def multiple_root(m: int):
    """Four simple roots and a root of multiplicity ``m - 4`` at ``1 - 1e-3``."""
    simple = np.array([-0.5, -1.0 / 3.0, -0.61, 0.121])

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.prod(x[..., None] - simple, axis=-1)
        return out * (x - (1.0 - 1e-3)) ** (m - 4)

    f.roots = np.sort(np.concatenate([simple, np.full(m - 4, 1.0 - 1e-3)]))
    return f


def f_sin(x):
    return np.sin(2.0 + 20.0 * (np.asarray(x, dtype=float) + 0.222) ** 2)


def yuji() -> ChebSeries:
    return ChebSeries([-0.1] * 6 + [1e-10, 1.0, 1e-15])


def random_coefficients(n: int, coeff_norm: float, seed: int, index: int = 0) -> ChebSeries:
    """``a_0..a_{n-1} ~ N(0, 1)`` and ``a_n`` chosen so that ``||c|| = coeff_norm``."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
    a = rng.standard_normal(n)
    lead = np.linalg.norm(a) / coeff_norm
    return ChebSeries(np.concatenate([a, [lead]]))


@dataclass(frozen=True)
class TableRow:
    experiment: str
    solver: str
    degree: int
    n: int
    sample: int | None
    coeff_norm: float
    n_roots: int
    max_abs_eigenvalue: float
    max_eta: float

    def as_list(self):
        return [self.experiment, self.solver, self.degree, self.n,
                "" if self.sample is None else self.sample,
                repr(self.coeff_norm), self.n_roots, repr(self.max_abs_eigenvalue),
                repr(self.max_eta)]


def _row(name, solver, degree, n, sample, series, delta):
    rep = find_roots(series, delta, solver=solver)
    return TableRow(name, solver, degree, n, sample, rep.coeff_norm, rep.n_roots,
                    rep.max_abs_eigenvalue, rep.max_eta)


# (degree, n) grids of the experiment tables, double precision only
WILK_GRID = [(14, 100), (24, 24), (24, 25), (24, 26), (24, 27), (24, 28), (24, 100),
             (34, 100), (44, 100), (54, 100)]
MULT_GRID = [(7, 100), (8, 8), (8, 9), (8, 10), (8, 11), (8, 100), (9, 100), (10, 100), (13, 100)]
SIN_GRID = [80, 100]
RAND_NORMS = [10.0 ** k for k in range(0, 16, 3)]


def table_rows(name: str, solvers=("structured", "dense-nobalance"), seed: int = 0,
               n_seeds: int = 20, rand_n: int = 30, rand_norms=None):
    """Rows of one experiment table, in a fixed order."""
    rows = []
    if name == "wilk":
        for degree, n in WILK_GRID:
            s = sample_series(wilkinson(degree), n)
            rows += [_row(name, sv, degree, n, None, s, 1e-3) for sv in solvers]
    elif name == "mult":
        for degree, n in MULT_GRID:
            s = sample_series(multiple_root(degree), n)
            rows += [_row(name, sv, degree, n, None, s, 1e-3) for sv in solvers]
    elif name == "sin":
        for n in SIN_GRID:
            s = sample_series(f_sin, n)
            rows += [_row(name, sv, n, n, None, s, 1e-3) for sv in solvers]
    elif name == "yuji":
        s = yuji()
        rows += [_row(name, sv, 8, 8, None, s, 1e-3) for sv in solvers]
    elif name == "rand":
        norms = RAND_NORMS if rand_norms is None else rand_norms
        # sample j shares a_0..a_{n-1} across the norm grid; only a_n changes
        for cn in norms:
            for j in range(n_seeds):
                s = random_coefficients(rand_n, cn, seed, j)
                rows += [_row(name, sv, rand_n, rand_n, j, s, 1e-5) for sv in solvers]
    else:
        raise ValueError(f"unknown experiment {name!r}; choose from {EXPERIMENTS}")
    return rows


EXPERIMENTS = ("rand", "wilk", "mult", "sin", "yuji")


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.as_list())
    return buf.getvalue()
