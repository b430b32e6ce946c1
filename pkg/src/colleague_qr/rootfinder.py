"""Chebyshev rootfinding with backward-error certificates.

Pipeline: monic normalisation, colleague generators, eigenvalues (structured
shifted QR, or the dense oracle for comparison), real parts of eigenvalues in
a thin rectangle around [-1, 1], and for each such root

    eta = |p(x)| / max(kappa, ||a||),   kappa = |x| |p'(x)|,

which sits near machine precision when the root is backward stable with
respect to the Chebyshev coefficients ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import ChebSeries, colleague_generators, derivative, evaluate, monic_normalize
from .generators import colleague_plus_rank1
from .oracle import OracleOptions, dense_eig
from .qr_driver import EigOptions, eig

__all__ = ["RootReport", "SOLVERS", "find_roots", "eta", "extract_real_roots", "colleague_eigenvalues"]

SOLVERS = ("structured", "dense", "dense-nobalance")


@dataclass(frozen=True, eq=False)
class RootReport:
    all_eigenvalues: np.ndarray
    real_roots: np.ndarray
    eta: np.ndarray
    kappa: np.ndarray
    coeff_norm: float
    solver: str = "structured"

    @property
    def n(self) -> int:
        return self.all_eigenvalues.size

    @property
    def n_roots(self) -> int:
        return self.real_roots.size

    @property
    def max_eta(self) -> float:
        return float(self.eta.max()) if self.eta.size else 0.0

    @property
    def max_abs_eigenvalue(self) -> float:
        return float(np.abs(self.all_eigenvalues).max()) if self.n else 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "solver": self.solver,
            "coeff_norm": float(self.coeff_norm),
            "n_roots": self.n_roots,
            "max_eta": self.max_eta,
            "max_abs_eigenvalue": self.max_abs_eigenvalue,
            "roots": [float(x) for x in self.real_roots],
            "eta": [float(x) for x in self.eta],
            "kappa": [float(x) for x in self.kappa],
            "eigenvalues": [[float(z.real), float(z.imag)] for z in self.all_eigenvalues],
        }


def extract_real_roots(eigs, delta: float) -> np.ndarray:
    """Real parts of the eigenvalues with ``-1-delta < Re z < 1+delta`` and
    ``|Im z| < delta``, sorted ascending (ties broken by imaginary part)."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    z = np.asarray(eigs, dtype=np.complex128).reshape(-1)
    inside = (z.real > -1 - delta) & (z.real < 1 + delta) & (z.imag > -delta) & (z.imag < delta)
    z = z[inside]
    order = np.lexsort((z.imag, z.real))
    return z.real[order]


def eta(s: ChebSeries, xhat: float) -> tuple[float, float]:
    """``(eta, kappa)`` of a computed root ``xhat``."""
    px = evaluate(s, xhat)
    kappa = abs(xhat) * abs(evaluate(derivative(s), xhat))
    return float(abs(px) / max(kappa, np.linalg.norm(s.coeffs))), float(kappa)


def colleague_eigenvalues(c, solver: str = "structured", opts: EigOptions | None = None) -> np.ndarray:
    g = colleague_generators(c)
    if solver == "structured":
        return eig(g, opts).eigenvalues
    if solver in ("dense", "dense-nobalance"):
        return dense_eig(colleague_plus_rank1(g).real, OracleOptions(balance=solver == "dense"))
    raise ValueError(f"unknown solver {solver!r}; choose from {SOLVERS}")


def find_roots(s: ChebSeries, delta: float = 1e-3, opts: EigOptions | None = None,
               solver: str = "structured") -> RootReport:
    """Roots of ``s`` near [-1, 1] with their certificates."""
    if s.degree < 1:
        raise ValueError("a constant has no roots to find")
    c, _ = monic_normalize(s)
    eigs = colleague_eigenvalues(c, solver, opts)
    roots = extract_real_roots(eigs, delta)
    dp = derivative(s)
    anorm = np.linalg.norm(s.coeffs)
    px = np.abs(evaluate(s, roots))
    kappa = np.abs(roots) * np.abs(evaluate(dp, roots))
    etas = px / np.maximum(kappa, anorm)
    return RootReport(eigs, roots, np.asarray(etas, dtype=float), np.asarray(kappa, dtype=float),
                      float(np.linalg.norm(c)), solver)
