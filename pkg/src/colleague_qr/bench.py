"""Wall-clock timing of the structured and dense solvers on colleague matrices."""
from __future__ import annotations

import time

import numpy as np

from .experiments import random_coefficients
from .rootfinder import colleague_eigenvalues

__all__ = ["BENCH_COLUMNS", "time_solver", "bench_rows", "doubling_ratios", "warm_up"]

BENCH_COLUMNS = ("n", "structured_seconds", "dense_seconds")


def warm_up() -> None:
    """Trigger JIT compilation so the first timed call measures the solver only."""
    c = random_coefficients(6, 2.0, 0).coeffs
    for solver in ("structured", "dense-nobalance"):
        colleague_eigenvalues(c[:-1] / c[-1], solver)


def time_solver(c, solver: str, reps: int = 3) -> float:
    """Median wall-clock seconds of ``reps`` eigenvalue solves."""
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        colleague_eigenvalues(c, solver)
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def bench_rows(sizes, reps: int = 3, seed: int = 0, dense_max: int | None = None):
    """``(n, structured_seconds, dense_seconds)`` per size; ``dense_seconds`` is
    ``None`` when ``n > dense_max``. Matrices come from random coefficients with
    ``||c|| = 2``; the dense solver is run without balancing."""
    if reps < 1:
        raise ValueError("reps must be at least 1")
    warm_up()
    rows = []
    for n in sizes:
        s = random_coefficients(int(n), 2.0, seed)
        c = s.coeffs[:-1] / s.coeffs[-1]
        ts = time_solver(c, "structured", reps)
        td = None if dense_max is not None and n > dense_max else time_solver(c, "dense-nobalance", reps)
        rows.append((int(n), ts, td))
    return rows


def doubling_ratios(times) -> np.ndarray:
    """Successive ratios ``t[k+1] / t[k]`` (sizes assumed to double)."""
    t = np.asarray(times, dtype=float)
    return t[1:] / t[:-1]
