"""Generator representations of Hermitian-plus-rank-1 structured matrices.

A lower Hessenberg matrix ``A + p q^*`` with ``A`` Hermitian is fully
described by the diagonal ``d`` and superdiagonal ``beta`` of ``A`` together
with the vectors ``p`` and ``q``. After the superdiagonal has been eliminated
the intermediate factor ``B + p q^*`` is lower triangular, and the upper
Hessenberg part of ``B`` is described by its diagonal, subdiagonal ``gamma``
and the same two vectors.

Dense reconstructions in this module are test and oracle utilities; the
solver never forms them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "HessGenerators",
    "TriGenerators",
    "reconstruct_hermitian",
    "reconstruct_triangular_hessenberg_part",
    "colleague_plus_rank1",
    "hermitian_frobenius_norm",
    "norm_hess",
    "norm_tri",
    "norm_frobenius",
]


def _as_vector(name, values, length):
    arr = np.array(values, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != length:
        raise ValueError(f"{name} has length {arr.shape[0]}, expected {length}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HessGenerators:
    """Generators ``(d, beta, p, q)`` of a lower Hessenberg ``A + p q^*``."""

    d: np.ndarray
    beta: np.ndarray
    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        n = np.size(self.d)
        if n < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "d", _as_vector("d", self.d, n))
        object.__setattr__(self, "beta", _as_vector("beta", self.beta, n - 1))
        object.__setattr__(self, "p", _as_vector("p", self.p, n))
        object.__setattr__(self, "q", _as_vector("q", self.q, n))

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def to_dict(self) -> dict:
        def enc(v):
            return [[float(z.real), float(z.imag)] for z in v]

        return {"n": self.n, "d": enc(self.d), "beta": enc(self.beta),
                "p": enc(self.p), "q": enc(self.q)}

    @classmethod
    def from_dict(cls, obj: dict) -> "HessGenerators":
        def dec(key):
            return [complex(re, im) for re, im in obj[key]]

        g = cls(dec("d"), dec("beta"), dec("p"), dec("q"))
        if "n" in obj and int(obj["n"]) != g.n:
            raise ValueError(f"declared n={obj['n']} but d has length {g.n}")
        return g

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "HessGenerators":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class TriGenerators:
    """Generators ``(d, gamma, p, q)`` of the upper Hessenberg part of ``B``
    where ``B + p q^*`` is lower triangular."""

    d: np.ndarray
    gamma: np.ndarray
    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        n = np.size(self.d)
        if n < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "d", _as_vector("d", self.d, n))
        object.__setattr__(self, "gamma", _as_vector("gamma", self.gamma, n - 1))
        object.__setattr__(self, "p", _as_vector("p", self.p, n))
        object.__setattr__(self, "q", _as_vector("q", self.q, n))

    @property
    def n(self) -> int:
        return self.d.shape[0]


def reconstruct_hermitian(g: HessGenerators) -> np.ndarray:
    """Dense Hermitian ``A`` from its generators.

    Entries above the superdiagonal are ``-p_i conj(q_j)``; entries below the
    subdiagonal are their conjugates ``-q_i conj(p_j)``.
    """
    n = g.n
    a = -np.outer(g.p, g.q.conj())
    a = np.triu(a, 2)
    a += np.diag(g.d)
    if n > 1:
        a += np.diag(g.beta, 1)
    # fill the strictly lower part from the conjugate of the upper part
    lower = np.tril(np.ones((n, n), dtype=bool), -1)
    a[lower] = a.conj().T[lower]
    return a


def reconstruct_triangular_hessenberg_part(g: TriGenerators) -> np.ma.MaskedArray:
    """Upper Hessenberg part of ``B`` from its generators.

    Entries below the subdiagonal are not determined by the generators; they
    are returned as zeros and masked.
    """
    n = g.n
    b = np.triu(-np.outer(g.p, g.q.conj()), 1)
    b += np.diag(g.d)
    if n > 1:
        b += np.diag(g.gamma, -1)
    out_of_view = np.tril(np.ones((n, n), dtype=bool), -2)
    return np.ma.MaskedArray(b, mask=out_of_view)


def colleague_plus_rank1(g: HessGenerators) -> np.ndarray:
    """Dense lower Hessenberg matrix ``A + p q^*``."""
    # far upper entries are -x + x for the same floating point x, hence exactly 0
    return reconstruct_hermitian(g) + np.outer(g.p, g.q.conj())


def _scaled_norm(x) -> float:
    x = np.abs(np.asarray(x))
    m = x.max(initial=0.0)
    return float(m * np.sqrt(np.sum((x / m) ** 2))) if m > 0 else 0.0


def hermitian_frobenius_norm(g: HessGenerators) -> float:
    """Frobenius norm of the Hermitian part, in O(n) without forming it.

    Sums of squares are scaled by the largest magnitude so entries up to the
    overflow threshold are handled.
    """
    n = g.n
    parts = [_scaled_norm(g.d), np.sqrt(2.0) * _scaled_norm(g.beta)]
    if n > 2:
        qa = np.abs(g.q)
        qmax = qa.max()
        if qmax > 0:
            tail = np.cumsum(((qa / qmax) ** 2)[::-1])[::-1]  # tail[k] = sum_{j>=k} |q_j|^2 / qmax^2
            far = _scaled_norm(np.abs(g.p[: n - 2]) * np.sqrt(tail[2:]))
            with np.errstate(over="ignore"):
                parts.append(np.sqrt(2.0) * far * qmax)
    with np.errstate(over="ignore", invalid="ignore"):
        return float(_scaled_norm(parts))


def norm_hess(m) -> float:
    """Root sum of squares over the upper Hessenberg part (``j >= i-1``)."""
    return float(np.linalg.norm(np.triu(np.asarray(m), -1)))


def norm_tri(m) -> float:
    """Root sum of squares over the upper triangular part (``j >= i``)."""
    return float(np.linalg.norm(np.triu(np.asarray(m))))


def norm_frobenius(m) -> float:
    return float(np.linalg.norm(np.asarray(m)))
