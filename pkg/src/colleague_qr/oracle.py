"""Dense unstructured eigensolvers used as oracles.

``dense_eig`` is a plain O(n^3) method: Householder reduction to upper
Hessenberg form followed by single-shift complex QR with Wilkinson shifts.
It is normwise backward stable, which for colleague matrices means a
backward error of order ``||c||^2 u`` in the coefficients; that contrast is
what the structured solver is measured against.

``char_poly_roots_small`` is an independent route for n <= 4: the
characteristic polynomial by cofactor expansion and its roots by the
quadratic, Cardano and Ferrari formulas.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numba import njit

__all__ = ["OracleOptions", "OracleConvergenceError", "dense_eig", "char_poly_roots_small",
           "char_poly_coefficients"]


class OracleConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleOptions:
    balance: bool = False
    tolerance: float = float(np.finfo(np.float64).eps)
    max_iters: int = 60  # per eigenvalue

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


@njit(cache=True)
def _hessenberg_reduce(a):
    """In-place Householder reduction to upper Hessenberg form."""
    n = a.shape[0]
    v = np.empty(n, dtype=a.dtype)
    w = np.empty(n, dtype=a.dtype)
    for k in range(n - 2):
        norm2 = 0.0
        for i in range(k + 1, n):
            norm2 += abs(a[i, k]) ** 2
        xnorm = np.sqrt(norm2)
        if xnorm == 0.0:
            continue
        x0 = a[k + 1, k]
        phase = x0 / abs(x0) if x0 != 0 else x0 * 0 + 1
        alpha = -phase * xnorm
        # v = x - alpha e_1, normalised
        vnorm2 = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
        v[k + 1] -= alpha
        for i in range(k + 1, n):
            vnorm2 += abs(v[i]) ** 2
        vn = np.sqrt(vnorm2)
        for i in range(k + 1, n):
            v[i] /= vn
        # left: a[k+1:, :] -= 2 v (v^* a[k+1:, :])
        for j in range(k, n):
            w[j] = 0
        for i in range(k + 1, n):
            vi = np.conj(v[i])
            for j in range(k, n):
                w[j] += vi * a[i, j]
        for i in range(k + 1, n):
            vi2 = 2 * v[i]
            for j in range(k, n):
                a[i, j] -= vi2 * w[j]
        # right: a[:, k+1:] -= 2 (a[:, k+1:] v) v^*
        for i in range(n):
            t = a[i, k + 1] * 0
            for j in range(k + 1, n):
                t += a[i, j] * v[j]
            t *= 2
            for j in range(k + 1, n):
                a[i, j] -= t * np.conj(v[j])
        for i in range(k + 2, n):
            a[i, k] = 0
    return a


@njit(cache=True)
def _wilkinson_shift(a, b, c, e):
    """Eigenvalue of ``[[a, b], [c, e]]`` closest to ``e``."""
    half = 0.5 * (e - a)
    r = np.sqrt(half * half + b * c)
    if (np.conj(half) * r).real < 0.0:
        r = -r
    den = half + r
    if den == 0:
        return e
    return e + (b * c) / den


@njit(cache=True)
def _hessenberg_qr(h, tol, max_iters):
    """Eigenvalues of the upper Hessenberg ``h`` (destroyed). Returns
    ``(eigs, ok)``."""
    n = h.shape[0]
    eigs = np.empty(n, dtype=np.complex128)
    hnorm = 0.0
    for i in range(n):
        for j in range(max(i - 1, 0), n):
            hnorm = max(hnorm, abs(h[i, j]))
    cs = np.empty(n, dtype=np.complex128)
    ss = np.empty(n, dtype=np.complex128)
    hi = n - 1
    its = 0
    while hi >= 0:
        if hi == 0:
            eigs[0] = h[0, 0]
            break
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if s == 0.0:
                s = hnorm
            if abs(h[lo, lo - 1]) <= tol * s:
                h[lo, lo - 1] = 0
                break
            lo -= 1
        if lo == hi:
            eigs[hi] = h[hi, hi]
            hi -= 1
            its = 0
            continue
        its += 1
        if its > max_iters:
            return eigs, False
        if its % 10 == 0:
            # exceptional shift to break cycles
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        for k in range(lo, hi + 1):
            h[k, k] -= mu
        # H - mu I = Q R, rows only inside the active window
        for k in range(lo, hi):
            x = h[k, k]
            y = h[k + 1, k]
            r = np.hypot(abs(x), abs(y))
            if r == 0.0:
                c = 1.0 + 0j
                s = 0j
            else:
                c = x / r
                s = y / r
            cs[k] = c
            ss[k] = s
            cc = np.conj(c)
            sc = np.conj(s)
            for j in range(k, hi + 1):
                t1 = h[k, j]
                t2 = h[k + 1, j]
                h[k, j] = cc * t1 + sc * t2
                h[k + 1, j] = -s * t1 + c * t2
        # R Q, one row at a time for contiguous access
        for i in range(lo, hi + 1):
            for k in range(max(lo, i - 1), hi):
                c = cs[k]
                s = ss[k]
                t1 = h[i, k]
                t2 = h[i, k + 1]
                h[i, k] = t1 * c + t2 * s
                h[i, k + 1] = -t1 * np.conj(s) + t2 * np.conj(c)
        for k in range(lo, hi + 1):
            h[k, k] += mu
    return eigs, True


def dense_eig(m, opts: OracleOptions | None = None) -> np.ndarray:
    """All eigenvalues of a dense square matrix (no particular order)."""
    opts = opts or OracleOptions()
    a = np.array(m, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("dense_eig needs a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if np.iscomplexobj(a):
        a = a.astype(np.complex128)
    else:
        a = a.astype(np.float64)
    if a.shape[0] == 0:
        return np.empty(0, dtype=np.complex128)
    if opts.balance:
        a, _ = scipy.linalg.matrix_balance(a)
    a = np.ascontiguousarray(a)
    _hessenberg_reduce(a)
    h = a.astype(np.complex128)
    eigs, ok = _hessenberg_qr(h, opts.tolerance, opts.max_iters)
    if not ok:
        raise OracleConvergenceError("dense QR did not converge")
    return eigs


def char_poly_coefficients(m) -> np.ndarray:
    """Ascending coefficients of ``det(lambda I - m)`` by cofactor expansion."""
    m = np.asarray(m, dtype=np.complex128)
    n = m.shape[0]
    entries = [[np.array([-m[i, j], 1.0 if i == j else 0.0]) for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = np.zeros(1, dtype=np.complex128)
        for idx, col in enumerate(cols):
            minor = det(rows[1:], cols[:idx] + cols[idx + 1:])
            term = np.polynomial.polynomial.polymul(entries[rows[0]][col], minor)
            total = np.polynomial.polynomial.polyadd(total, term if idx % 2 == 0 else -term)
        return total

    coeffs = np.zeros(n + 1, dtype=np.complex128)
    poly = det(list(range(n)), list(range(n)))
    coeffs[: poly.size] = poly[: n + 1]
    return coeffs


def _quadratic(b, c):
    # roots of x^2 + b x + c
    r = cmath.sqrt(b * b - 4 * c)
    if (b.conjugate() * r).real < 0:
        r = -r
    qq = -0.5 * (b + r)
    if qq == 0:
        return [0j, 0j]
    return [qq, c / qq]


def _cubic(a, b, c):
    # roots of x^3 + a x^2 + b x + c
    p = b - a * a / 3
    q = 2 * a ** 3 / 27 - a * b / 3 + c
    shift = -a / 3
    if p == 0 and q == 0:
        return [shift] * 3
    disc = cmath.sqrt(q * q / 4 + p ** 3 / 27)
    w = -q / 2 + disc
    if abs(-q / 2 - disc) > abs(w):
        w = -q / 2 - disc
    u = w ** (1 / 3)
    omega = complex(-0.5, np.sqrt(3) / 2)
    roots = []
    for k in range(3):
        uk = u * omega ** k
        roots.append(uk - p / (3 * uk) + shift)
    return roots


def _quartic(a, b, c, d):
    # roots of x^4 + a x^3 + b x^2 + c x + d (Ferrari)
    p = b - 3 * a * a / 8
    q = c - a * b / 2 + a ** 3 / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a ** 4 / 256
    shift = -a / 4
    if q == 0:
        ys = []
        for z in _quadratic(p, r):
            s = cmath.sqrt(z)
            ys += [s, -s]
        return [y + shift for y in ys]
    # resolvent: 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0
    ms = _cubic(p, (2 * p * p - 8 * r) / 8, -q * q / 8)
    m = max(ms, key=abs)
    s2m = cmath.sqrt(2 * m)
    roots = []
    for sgn in (1, -1):
        inner = cmath.sqrt(-(2 * p + 2 * m + sgn * 2 * q / s2m))
        roots.append((sgn * s2m + inner) / 2 + shift)
        roots.append((sgn * s2m - inner) / 2 + shift)
    return roots


def _polish(k, roots, steps=4):
    # Newton on the characteristic polynomial; the closed forms lose digits to
    # cancellation when root magnitudes differ widely. A step is kept only if
    # it lowers the residual.
    poly = np.polynomial.polynomial
    dk = poly.polyder(k)
    out = []
    for z in roots:
        res = abs(poly.polyval(z, k))
        for _ in range(steps):
            d = poly.polyval(z, dk)
            if d == 0:
                break
            z_new = z - poly.polyval(z, k) / d
            res_new = abs(poly.polyval(z_new, k))
            if not res_new < res:
                break
            z, res = z_new, res_new
        out.append(complex(z))
    return out


def char_poly_roots_small(m, polish: bool = True) -> np.ndarray:
    """Eigenvalues of an n <= 4 matrix from closed-form polynomial roots,
    optionally refined by a few Newton steps on the same polynomial."""
    m = np.asarray(m)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise ValueError("square matrix required")
    if n > 4:
        raise ValueError("closed-form roots are only available for n <= 4")
    if n == 0:
        return np.empty(0, dtype=np.complex128)
    k = [complex(v) for v in char_poly_coefficients(m)]
    if n == 1:
        roots = [-k[0]]
    elif n == 2:
        roots = _quadratic(k[1], k[0])
    elif n == 3:
        roots = _cubic(k[2], k[1], k[0])
    else:
        roots = _quartic(k[3], k[2], k[1], k[0])
    if polish and n > 1:
        roots = _polish(np.array(k), roots)
    return np.array(roots, dtype=np.complex128)
