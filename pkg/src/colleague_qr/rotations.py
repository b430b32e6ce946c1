"""Complex plane rotations in SU(2).

A rotation is stored as the pair ``(c, s)`` and acts on a 2-vector as the
matrix ``[[c, -s], [conj(s), conj(c)]]``. The jitted scalar kernels
(``givens``, ``rotate``, ``rotate_conj``) are shared by the sweep and the
Python-level API below, so both see bit-identical values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

__all__ = [
    "PlaneRotation",
    "rotation_eliminating_first",
    "apply",
    "apply_conjugate",
    "givens",
    "rotate",
    "rotate_conj",
]


@njit(cache=True, inline="always")
def givens(x1, x2):
    """``(c, s)`` with ``c*x1 - s*x2 == 0``; identity when ``x1`` is already 0."""
    if x1 == 0:
        return complex(1.0, 0.0), complex(0.0, 0.0)
    # abs() of a complex value is hypot-based, so no intermediate overflow
    r = math.hypot(abs(x1), abs(x2))
    c = complex(x2.real / r, x2.imag / r)
    s = complex(x1.real / r, x1.imag / r)
    return c, s


@njit(cache=True, inline="always")
def rotate(c, s, x1, x2):
    return c * x1 - s * x2, s.conjugate() * x1 + c.conjugate() * x2


@njit(cache=True, inline="always")
def rotate_conj(c, s, x1, x2):
    # entrywise conjugate of the rotation matrix: [[conj c, -conj s], [s, c]]
    return c.conjugate() * x1 - s.conjugate() * x2, s * x1 + c * x2


@dataclass(frozen=True)
class PlaneRotation:
    c: complex
    s: complex

    @property
    def matrix(self) -> np.ndarray:
        c, s = self.c, self.s
        return np.array([[c, -s], [s.conjugate(), c.conjugate()]])

    @classmethod
    def identity(cls) -> "PlaneRotation":
        return cls(1 + 0j, 0j)


def rotation_eliminating_first(x1, x2) -> PlaneRotation:
    """Rotation ``Q`` with ``(Q @ (x1, x2))[0] == 0`` up to roundoff."""
    c, s = givens(complex(x1), complex(x2))
    return PlaneRotation(complex(c), complex(s))


def apply(r: PlaneRotation, x1, x2) -> tuple[complex, complex]:
    y1, y2 = rotate(complex(r.c), complex(r.s), complex(x1), complex(x2))
    return complex(y1), complex(y2)


def apply_conjugate(r: PlaneRotation, x1, x2) -> tuple[complex, complex]:
    y1, y2 = rotate_conj(complex(r.c), complex(r.s), complex(x1), complex(x2))
    return complex(y1), complex(y2)
