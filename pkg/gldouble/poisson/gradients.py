"""Exact left and right gradients computed with jets.

For F on the double, with P = dF/dX and Q = dF/dY the matrices of partial
derivatives, the gradients with respect to <<(a,b),(a',b')>> = tr(aa') - tr(bb')
are

    grad_L F = (X P^T, -Y Q^T),    grad_R F = (P^T X, -Q^T Y),

so that <<grad_L F, (xi, eta)>> = d/dt F(e^{t xi} X, e^{t eta} Y) at t = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from gldouble.errors import ResampleRequired
from gldouble.exact import Jet, JetMat, Mat, MatrixLike
from gldouble.poisson.lie import LiePair

logger = logging.getLogger(__name__)


def _der(value: Any) -> Fraction:
    return value.der if isinstance(value, Jet) else Fraction(0)


def _val(value: Any) -> Fraction:
    return value.val if isinstance(value, Jet) else Fraction(value)


def directional_derivative(
    F: Callable[[MatrixLike, MatrixLike], Any], X: Mat, Y: Mat, dX: Mat, dY: Mat
) -> Fraction:
    """d/dt F(X + t dX, Y + t dY) at t = 0."""
    return _der(F(JetMat(X, dX), JetMat(Y, dY)))


def partials(F: Callable[[MatrixLike, MatrixLike], Any], X: Mat, Y: Mat) -> tuple[Mat, Mat]:
    """P = dF/dX and Q = dF/dY, one jet evaluation per coordinate."""
    n = X.n
    Xj, Yj = JetMat.lift(X), JetMat.lift(Y)
    P = [[_der(F(JetMat(X, Mat.unit(n, i, j)), Yj)) for j in range(n)] for i in range(n)]
    Q = [[_der(F(Xj, JetMat(Y, Mat.unit(n, i, j)))) for j in range(n)] for i in range(n)]
    return Mat(P), Mat(Q)


@dataclass(frozen=True)
class GradientPair:
    """grad_L and grad_R of a function at a point, together with its value there."""

    left: LiePair
    right: LiePair
    value: Fraction


@dataclass(frozen=True)
class MatrixGradient:
    """Left and right gradients of a function of a single matrix, trace form."""

    left: Mat
    right: Mat
    value: Fraction


def gradients(F: Callable[[MatrixLike, MatrixLike], Any], X: Mat, Y: Mat) -> GradientPair:
    """Exact grad_L and grad_R of F at (X, Y).

    Raises:
        ResampleRequired: F is undefined at (X, Y)
    """
    try:
        value = _val(F(X, Y))
        P, Q = partials(F, X, Y)
    except ZeroDivisionError as e:
        raise ResampleRequired(f"{getattr(F, 'label', F)} is undefined at the sample point: {e}") from e
    left = LiePair(X @ P.T, -(Y @ Q.T))
    right = LiePair(P.T @ X, -(Q.T @ Y))
    return GradientPair(left=left, right=right, value=value)


def matrix_gradients(f: Callable[[MatrixLike], Any], X: Mat) -> MatrixGradient:
    """grad_L f = X P^T and grad_R f = P^T X for f of one matrix."""
    n = X.n
    try:
        value = _val(f(X))
        P = Mat([[_der(f(JetMat(X, Mat.unit(n, i, j)))) for j in range(n)] for i in range(n)])
    except ZeroDivisionError as e:
        raise ResampleRequired(f"{getattr(f, 'label', f)} is undefined at the sample point: {e}") from e
    return MatrixGradient(left=X @ P.T, right=P.T @ X, value=value)
