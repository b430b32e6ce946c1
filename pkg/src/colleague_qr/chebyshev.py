"""Chebyshev series on [-1, 1] and the colleague matrix."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .generators import HessGenerators

__all__ = [
    "ChebSeries",
    "evaluate",
    "derivative",
    "chebyshev_points",
    "interpolate",
    "trim",
    "monic_normalize",
    "colleague_generators",
    "read_coefficients",
    "write_coefficients",
]


@dataclass(frozen=True, eq=False)
class ChebSeries:
    """``sum_j coeffs[j] T_j(x)``, coefficients in ascending order."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=np.float64).reshape(-1)
        if a.size == 0:
            raise ValueError("a Chebyshev series needs at least one coefficient")
        if not np.all(np.isfinite(a)):
            raise ValueError("coefficients must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x):
        return evaluate(self, x)


def evaluate(s: ChebSeries, x):
    """Clenshaw evaluation; ``x`` may be real, complex or an array."""
    return npcheb.chebval(x, s.coeffs)


def derivative(s: ChebSeries) -> ChebSeries:
    if s.degree == 0:
        return ChebSeries([0.0])
    return ChebSeries(npcheb.chebder(s.coeffs))


def chebyshev_points(n: int) -> np.ndarray:
    """The ``n + 1`` extrema ``cos(j pi / n)``, ``j = 0..n`` (descending)."""
    if n == 0:
        return np.array([1.0])
    return np.cos(np.pi * np.arange(n + 1) / n)


def interpolate(samples) -> ChebSeries:
    """Coefficients of the degree-``n`` interpolant through ``n + 1`` samples
    taken at :func:`chebyshev_points`."""
    f = np.asarray(samples, dtype=np.float64).reshape(-1)
    n = f.size - 1
    if n < 0:
        raise ValueError("need at least one sample")
    if n == 0:
        return ChebSeries(f.copy())
    # a_k = (2/n) sum''_j f_j cos(pi j k / n), endpoint terms halved; the
    # angle is reduced mod 2n exactly in integers before taking the cosine
    jk = np.outer(np.arange(n + 1), np.arange(n + 1)) % (2 * n)
    w = np.ones(n + 1)
    w[0] = w[n] = 0.5
    a = (2.0 / n) * (np.cos(np.pi * jk / n) @ (w * f))
    a[0] /= 2.0
    a[n] /= 2.0
    return ChebSeries(a)


def trim(s: ChebSeries) -> ChebSeries:
    """Drop exactly-zero trailing coefficients (keeps at least one)."""
    a = s.coeffs
    nz = np.flatnonzero(a)
    if nz.size == 0:
        return ChebSeries(a[:1])
    return ChebSeries(a[: nz[-1] + 1])


def monic_normalize(s: ChebSeries) -> tuple[np.ndarray, float]:
    """Return ``(c_0..c_{n-1}, a_n)`` with ``c_j = a_j / a_n``."""
    a = s.coeffs
    lead = float(a[-1])
    if lead == 0.0:
        raise ValueError("leading coefficient is zero; call trim() first")
    return a[:-1] / lead, lead


def colleague_generators(c) -> HessGenerators:
    """Generators of the scaled colleague matrix of ``sum_{j<n} c_j T_j + T_n``.

    The Hermitian part is tridiagonal with zero diagonal and superdiagonal
    ``(1/sqrt 2, 1/2, ..., 1/2)``; the rank-1 part is ``e_n q^*`` with
    ``q^* = -(c_0 sqrt 2, c_1, ..., c_{n-1}) / 2``.
    """
    c = np.asarray(c, dtype=np.float64).reshape(-1)
    n = c.size
    if n == 0:
        raise ValueError("colleague matrix needs degree >= 1")
    beta = np.full(n - 1, 0.5)
    if n > 1:
        beta[0] = 1.0 / np.sqrt(2.0)
    q = -0.5 * c
    # the sqrt(2) balances the T_0 column against the first row; for n = 1
    # the matrix is just (-c_0)
    q[0] = -c[0] / np.sqrt(2.0) if n > 1 else -c[0]
    p = np.zeros(n)
    p[-1] = 1.0
    return HessGenerators(np.zeros(n), beta, p, q)


def read_coefficients(path) -> ChebSeries:
    """Plain text (one coefficient per line, ``a_0`` first) or JSON
    ``{"coeffs": [...]}``."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return ChebSeries(json.loads(text)["coeffs"])
    values = [float(line) for line in text.split("\n") if line.strip() and not line.lstrip().startswith("#")]
    return ChebSeries(values)


def write_coefficients(s: ChebSeries, path, fmt: str = "text") -> None:
    if fmt == "json":
        Path(path).write_text(json.dumps({"coeffs": [float(v) for v in s.coeffs]}) + "\n")
    elif fmt == "text":
        Path(path).write_text("".join(f"{float(v)!r}\n" for v in s.coeffs))
    else:
        raise ValueError(f"unknown coefficient format {fmt!r}")
