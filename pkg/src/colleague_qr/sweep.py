"""One explicit QR sweep on the generator representation.

A sweep eliminates the superdiagonal of ``A + p q^*`` from the bottom up
(producing the generators of the lower triangular ``B + p q^*`` and the
rotations ``Q_n, ..., Q_2``), then multiplies by the adjoint rotations on the
right to return to lower Hessenberg form. Both halves cost O(n).

Indices inside the kernels are 0-based; step ``k`` rotates the plane
``(k-1, k)``. Kernels work in place on the index window ``[lo, hi)`` so the
eigenvalue driver can sweep trailing submatrices without copying.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .generators import HessGenerators, TriGenerators
from .rotations import PlaneRotation, givens, rotate, rotate_conj

__all__ = [
    "BreakdownError",
    "SweepWorkspace",
    "eliminate_superdiagonal",
    "rotate_back",
    "qr_sweep",
]


class BreakdownError(ArithmeticError):
    """A sweep produced a non-finite value."""

    def __init__(self, msg, step):
        super().__init__(msg)
        self.step = step


@njit(cache=True)
def _finite(z):
    return np.isfinite(z.real) and np.isfinite(z.imag)


@njit(cache=True)
def eliminate_kernel(d, beta, p, q, lo, hi, cs, ss, gamma, bwork, qt, correct):
    """Triangularize the window ``[lo, hi)`` in place.

    On exit ``d`` and ``gamma`` hold the diagonal and subdiagonal of ``B``,
    ``p`` holds ``U p``, and ``cs[k], ss[k]`` the rotation of step ``k``.
    ``beta`` and ``q`` are read only. Returns -1, or the step ``k`` at which
    a non-finite value first appeared.
    """
    for j in range(lo, hi - 1):
        gamma[j] = beta[j].conjugate()
        bwork[j] = beta[j]
    for j in range(lo, hi):
        qt[j] = q[j]

    for k in range(hi - 1, lo, -1):
        qk = q[k].conjugate()
        x1 = bwork[k - 1] + p[k - 1] * qk
        x2 = d[k] + p[k] * qk
        c, s = givens(x1, x2)
        cs[k] = c
        ss[k] = s

        if k - 2 >= lo:
            # the sub-subdiagonal entry (k, k-2) is recovered from the
            # Hermitian symmetry of B U^* and the rotated copy of q
            sub2 = -qt[k] * p[k - 2].conjugate()
            gamma[k - 2] = c * gamma[k - 2] - s * sub2

        d[k - 1], gamma[k - 1] = rotate(c, s, d[k - 1], gamma[k - 1])

        # correction test on the values before this rotation
        lhs = abs(p[k - 1] * qk) ** 2 + abs(p[k] * qk) ** 2
        rhs = abs(bwork[k - 1]) ** 2 + abs(d[k]) ** 2

        bwork[k - 1], d[k] = rotate(c, s, bwork[k - 1], d[k])
        p[k - 1], p[k] = rotate(c, s, p[k - 1], p[k])
        if correct and lhs > rhs:
            # lhs > 0 here, so q[k] != 0
            p[k - 1] = -bwork[k - 1] / qk
        qt[k - 1], qt[k] = rotate(c, s, qt[k - 1], qt[k])

        if not (_finite(c) and _finite(s) and _finite(d[k]) and _finite(p[k - 1])
                and _finite(gamma[k - 1])):
            return k
    return -1


@njit(cache=True)
def rotate_back_kernel(d, beta, p, q, lo, hi, cs, ss, gamma):
    """Apply ``U^*`` on the right of ``B + p q^*`` over ``[lo, hi)`` in place.

    On exit ``d`` and ``beta`` hold the new diagonal and superdiagonal and
    ``q`` holds ``U q``; ``p`` is read only.
    """
    for k in range(hi - 1, lo, -1):
        c = cs[k]
        s = ss[k]
        d[k - 1], beta[k - 1] = rotate_conj(c, s, d[k - 1], -p[k - 1] * q[k].conjugate())
        _, d[k] = rotate_conj(c, s, gamma[k - 1], d[k])
        q[k - 1], q[k] = rotate(c, s, q[k - 1], q[k])
        if not (_finite(d[k]) and _finite(beta[k - 1]) and _finite(q[k])):
            return k
    return -1


@njit(cache=True)
def sweep_kernel(d, beta, p, q, lo, hi, cs, ss, gamma, bwork, qt, correct):
    k = eliminate_kernel(d, beta, p, q, lo, hi, cs, ss, gamma, bwork, qt, correct)
    if k >= 0:
        return k
    return rotate_back_kernel(d, beta, p, q, lo, hi, cs, ss, gamma)


@dataclass(frozen=True, eq=False)
class SweepWorkspace:
    """Rotations recorded by an elimination, plus the rotated copy of ``q``.

    ``rotations[j]`` rotates the plane ``(j, j+1)`` (0-based), i.e. it is the
    rotation of step ``k = j + 1``.
    """

    c: np.ndarray
    s: np.ndarray
    qtilde: np.ndarray

    @property
    def rotations(self) -> list[PlaneRotation]:
        return [PlaneRotation(complex(c), complex(s)) for c, s in zip(self.c, self.s)]

    def unitary(self) -> np.ndarray:
        """Dense ``U = U_2 U_3 ... U_n`` assembled in working precision."""
        n = self.c.shape[0] + 1
        u = np.eye(n, dtype=np.complex128)
        # U = U_2 (U_3 (... U_n)): apply U_n first, U_2 last, on the left
        for j in range(n - 2, -1, -1):
            c, s = self.c[j], self.s[j]
            r0 = u[j].copy()
            r1 = u[j + 1].copy()
            u[j] = c * r0 - s * r1
            u[j + 1] = np.conj(s) * r0 + np.conj(c) * r1
        return u


def _check_step(k, stage):
    if k >= 0:
        raise BreakdownError(f"non-finite value in {stage} at step k={k + 1}", k + 1)


def eliminate_superdiagonal(g: HessGenerators, *, correct: bool = True):
    """Triangularize ``A + p q^*``.

    Returns ``(TriGenerators(d, gamma, Up, q), SweepWorkspace)``. Setting
    ``correct=False`` skips the rank-1 correction of ``p`` and exists only to
    demonstrate that the correction is needed.
    """
    n = g.n
    if n < 2:
        raise ValueError("elimination needs n >= 2")
    d = g.d.copy()
    p = g.p.copy()
    cs = np.ones(n, dtype=np.complex128)
    ss = np.zeros(n, dtype=np.complex128)
    gamma = np.empty(n - 1, dtype=np.complex128)
    bwork = np.empty(n - 1, dtype=np.complex128)
    qt = np.empty(n, dtype=np.complex128)
    k = eliminate_kernel(d, g.beta, p, g.q, 0, n, cs, ss, gamma, bwork, qt, correct)
    _check_step(k, "elimination")
    tri = TriGenerators(d, gamma, p, g.q)
    return tri, SweepWorkspace(cs[1:].copy(), ss[1:].copy(), qt)


def rotate_back(t: TriGenerators, w: SweepWorkspace) -> HessGenerators:
    """Return ``B U^* + (U p)(U q)^*`` in generator form."""
    n = t.n
    if w.c.shape[0] != n - 1:
        raise ValueError(f"workspace holds {w.c.shape[0]} rotations, expected {n - 1}")
    cs = np.concatenate([[1.0 + 0j], w.c])
    ss = np.concatenate([[0j], w.s])
    d = t.d.copy()
    q = t.q.copy()
    beta = np.zeros(n - 1, dtype=np.complex128)
    k = rotate_back_kernel(d, beta, t.p, q, 0, n, cs, ss, t.gamma)
    _check_step(k, "rotation back")
    return HessGenerators(d, beta, t.p, q)


def qr_sweep(g: HessGenerators, *, correct: bool = True, return_workspace: bool = False):
    """One unshifted QR iteration; the input is not modified."""
    if g.n == 1:
        return (g, SweepWorkspace(np.empty(0, complex), np.empty(0, complex), g.q.copy())) \
            if return_workspace else g
    tri, w = eliminate_superdiagonal(g, correct=correct)
    out = rotate_back(tri, w)
    return (out, w) if return_workspace else out
