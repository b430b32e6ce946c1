"""Explicit structured QR eigensolvers (unshifted and Wilkinson-shifted).

Eigenvalues deflate at the top-left corner: once the coupling
``|beta_i + p_i conj(q_{i+1})|`` drops below the tolerance, ``d_i + p_i
conj(q_i)`` is an eigenvalue and iteration continues on the trailing window
``[i+1, n)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .generators import HessGenerators, hermitian_frobenius_norm
from .sweep import BreakdownError, sweep_kernel

__all__ = [
    "EigOptions",
    "EigResult",
    "ConvergenceError",
    "default_epsilon",
    "eig_unshifted",
    "eig_shifted",
    "wilkinson_pair",
]

UNIT_ROUNDOFF = np.finfo(np.float64).eps


class ConvergenceError(RuntimeError):
    """The iteration budget for one eigenvalue was exhausted."""

    def __init__(self, msg, index, residual):
        super().__init__(msg)
        self.index = index
        self.residual = residual


@dataclass(frozen=True)
class EigOptions:
    epsilon: float | None = None  # None: default_epsilon(g)
    max_iters_per_eigenvalue: int = 80
    warmup_unshifted_sweeps: int = 2
    mode: str = "shifted"

    def __post_init__(self):
        if self.epsilon is not None and not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.max_iters_per_eigenvalue < 1:
            raise ValueError("max_iters_per_eigenvalue must be positive")
        if self.warmup_unshifted_sweeps < 0:
            raise ValueError("warmup_unshifted_sweeps must be nonnegative")
        if self.mode not in ("shifted", "unshifted"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True, eq=False)
class EigResult:
    eigenvalues: np.ndarray
    iterations: np.ndarray  # sweeps spent before each deflation
    total_sweeps: int
    max_total_shift: float
    epsilon: float = field(default=0.0)


def default_epsilon(g: HessGenerators) -> float:
    """Deflation tolerance ``4 n u ||A||_F``."""
    return 4.0 * g.n * UNIT_ROUNDOFF * hermitian_frobenius_norm(g)


@njit(cache=True)
def wilkinson_pair(a, b, c, e):
    """Eigenvalues of ``[[a, b], [c, e]]``, the one closest to ``a`` first."""
    half = 0.5 * (a - e)
    r = np.sqrt(half * half + b * c)
    # pick the branch of the root that avoids cancellation in half + r
    if (half.conjugate() * r).real < 0.0:
        r = -r
    den = half + r
    if den == 0.0:
        return a, e
    near = a + (b * c) / den
    far = a - den
    if abs(far - a) < abs(near - a):
        return far, near
    return near, far


@njit(cache=True)
def _qr_eig_kernel(d, beta, p, q, eps, max_iters, warmup, shifted, lam, iters):
    """Returns ``(status, index, residual, total_sweeps, max_total_shift)``.

    ``status`` is 0 on success, 1 when the budget ran out at ``index``, 2
    when a sweep produced a non-finite value.
    """
    n = d.shape[0]
    cs = np.ones(n, dtype=np.complex128)
    ss = np.zeros(n, dtype=np.complex128)
    gamma = np.empty(max(n - 1, 1), dtype=np.complex128)
    bwork = np.empty(max(n - 1, 1), dtype=np.complex128)
    qt = np.empty(n, dtype=np.complex128)
    total = 0
    max_shift = 0.0

    if shifted and n > 2:
        for _ in range(warmup):
            if sweep_kernel(d, beta, p, q, 0, n, cs, ss, gamma, bwork, qt, True) >= 0:
                return 2, 0, 0.0, total, max_shift
            total += 1

    for i in range(n - 1):
        musum = 0j
        it = 0
        while True:
            coupling = abs(beta[i] + p[i] * q[i + 1].conjugate())
            if not coupling >= eps:  # also stops on NaN, caught below
                break
            if it >= max_iters:
                return 1, i, coupling, total, max_shift
            if shifted:
                mu, _ = wilkinson_pair(
                    d[i] + p[i] * q[i].conjugate(),
                    beta[i] + p[i] * q[i + 1].conjugate(),
                    beta[i].conjugate() + p[i + 1] * q[i].conjugate(),
                    d[i + 1] + p[i + 1] * q[i + 1].conjugate(),
                )
                musum += mu
                if abs(musum) > max_shift:
                    max_shift = abs(musum)
                for j in range(i, n):
                    d[j] -= mu
            if sweep_kernel(d, beta, p, q, i, n, cs, ss, gamma, bwork, qt, True) >= 0:
                return 2, i, coupling, total, max_shift
            it += 1
            total += 1
        if shifted:
            for j in range(i, n):
                d[j] += musum
        iters[i] = it
        lam[i] = d[i] + p[i] * q[i].conjugate()
    lam[n - 1] = d[n - 1] + p[n - 1] * q[n - 1].conjugate()
    return 0, -1, 0.0, total, max_shift


def _run(g: HessGenerators, opts: EigOptions, shifted: bool) -> EigResult:
    eps = opts.epsilon if opts.epsilon is not None else default_epsilon(g)
    if not np.isfinite(eps):
        raise BreakdownError("the norm of the Hermitian part overflows", 0)
    if eps == 0.0:
        # A == 0: pick a tolerance relative to the rank-1 part instead
        eps = 4.0 * g.n * UNIT_ROUNDOFF * float(np.linalg.norm(g.p) * np.linalg.norm(g.q))
        eps = eps or np.finfo(np.float64).tiny
    d, p, q = g.d.copy(), g.p.copy(), g.q.copy()
    beta = g.beta.copy() if g.n > 1 else np.zeros(1, dtype=np.complex128)
    lam = np.empty(g.n, dtype=np.complex128)
    iters = np.zeros(g.n, dtype=np.int64)
    status, index, residual, total, max_shift = _qr_eig_kernel(
        d, beta, p, q, eps, opts.max_iters_per_eigenvalue,
        opts.warmup_unshifted_sweeps, shifted, lam, iters)
    if status == 1:
        raise ConvergenceError(
            f"no deflation at index {index} after {opts.max_iters_per_eigenvalue} sweeps "
            f"(coupling {residual:.3e}, tolerance {eps:.3e})", index, residual)
    if status == 2:
        raise BreakdownError(f"non-finite value while deflating index {index}", index)
    return EigResult(lam, iters, int(total), float(max_shift), float(eps))


def eig_unshifted(g: HessGenerators, opts: EigOptions | None = None) -> EigResult:
    """Eigenvalues by unshifted explicit QR (no warm-up, no shifts)."""
    return _run(g, opts or EigOptions(mode="unshifted"), shifted=False)


def eig_shifted(g: HessGenerators, opts: EigOptions | None = None) -> EigResult:
    """Eigenvalues by Wilkinson-shifted explicit QR.

    A few unshifted sweeps on the whole matrix come first (``opts.
    warmup_unshifted_sweeps``) so the small eigenvalues tend to deflate
    first and the accumulated shift stays small.
    """
    return _run(g, opts or EigOptions(), shifted=True)


def eig(g: HessGenerators, opts: EigOptions | None = None) -> EigResult:
    opts = opts or EigOptions()
    if opts.mode == "unshifted":
        return eig_unshifted(g, opts)
    return eig_shifted(g, opts)
