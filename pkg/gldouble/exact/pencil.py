"""Exact interpolation of univariate polynomials and the det(X + lambda Y) pencil."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from operator import add
from typing import Sequence

from gldouble.errors import DimensionError
from gldouble.exact.matrix import Mat, MatrixLike


@lru_cache(maxsize=64)
def vandermonde_inverse(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the Vandermonde matrix at nodes 0, 1, ..., m-1."""
    nodes = [Fraction(t) for t in range(m)]
    vander = Mat([[t**i for i in range(m)] for t in nodes])
    return vander.inverse().rows


def interpolate(values: Sequence) -> list:
    """Coefficients a_0..a_{m-1} of the polynomial taking values[t] at t = 0..m-1.

    The map is linear, so values may be Fractions or Jets.
    """
    m = len(values)
    if m == 0:
        return []
    inv = vandermonde_inverse(m)
    return [reduce(add, (c * v for c, v in zip(row, values))) for row in inv]


def evaluate_polynomial(coeffs: Sequence, t) -> Fraction:
    """Horner evaluation of sum coeffs[i] t^i."""
    result = Fraction(0)
    for c in reversed(coeffs):
        result = result * t + c
    return result


def poly_coeffs_from_pencil(X: MatrixLike, Y: MatrixLike) -> list:
    """Raw coefficients a_0..a_n of det(X + lambda Y), by exact interpolation."""
    if X.shape != Y.shape:
        raise DimensionError(f"pencil shape mismatch {X.shape} vs {Y.shape}")
    n = X.n
    values = [(X + Y * Fraction(t)).det() for t in range(n + 1)]
    return interpolate(values)
