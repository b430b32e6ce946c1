"""Structured QR eigensolver for Hermitian-plus-rank-1 Hessenberg matrices and
a Chebyshev rootfinder built on colleague matrices."""
from .chebyshev import ChebSeries, colleague_generators, interpolate
from .generators import HessGenerators, TriGenerators
from .oracle import OracleOptions, dense_eig
from .qr_driver import ConvergenceError, EigOptions, EigResult, eig, eig_shifted, eig_unshifted
from .rootfinder import RootReport, find_roots
from .sweep import BreakdownError, qr_sweep

__all__ = [
    "ChebSeries", "colleague_generators", "interpolate",
    "HessGenerators", "TriGenerators",
    "OracleOptions", "dense_eig",
    "ConvergenceError", "EigOptions", "EigResult", "eig", "eig_shifted", "eig_unshifted",
    "RootReport", "find_roots",
    "BreakdownError", "qr_sweep",
]
