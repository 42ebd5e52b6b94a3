"""The double bracket {,}_D, the standard bracket {,}_r and the dual bracket {,}_*."""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Any, Callable

from gldouble.exact import Mat, MatrixLike
from gldouble.family.points import (
    DoublePoint,
    DualPoint,
    sample_diagonal_point,
    sample_double_point,
    sample_dual_point,
)
from gldouble.poisson.base import BaseBracket
from gldouble.poisson.gradients import GradientPair, MatrixGradient, gradients, matrix_gradients
from gldouble.poisson.lie import HALF, r_double, r_std, trace_form

logger = logging.getLogger(__name__)

# {F, G}_D restricted to the diagonal equals DIAGONAL_SIGN * {f, g}_r, where
# f, g are the restrictions of F, G. With R_D(A, 0) = (-RA, A - RA) the two
# gradient terms come out with opposite orientation.
DIAGONAL_SIGN = -1


class DiagonalRestriction:
    """X -> F(X, X): a function on the double seen as a function of one matrix."""

    arity = 1

    def __init__(self, fn: Callable[[MatrixLike, MatrixLike], Any], label: str | None = None):
        self.fn = fn
        self.label = label or getattr(fn, "label", None)
        self.degree = getattr(fn, "degree", 0)

    def __call__(self, X: MatrixLike):
        return self.fn(X, X)

    def __repr__(self) -> str:
        return f"DiagonalRestriction({self.label})"


class OfU:
    """(X, Y) -> f(X^-1 Y) for an evaluator f of a single matrix U."""

    def __init__(self, fn: Callable[[MatrixLike], Any], label: str | None = None):
        self.fn = fn
        self.label = label or getattr(fn, "label", None)
        self.degree = getattr(fn, "degree", 0)

    def __call__(self, X: MatrixLike, Y: MatrixLike):
        return self.fn(X.inverse() @ Y)


def as_function_of_u(fn: Callable) -> Callable[[MatrixLike, MatrixLike], Any]:
    """Evaluators of U in the (X, Y) form the double bracket consumes."""
    if getattr(fn, "dual", False) or isinstance(fn, OfU):
        return fn
    if hasattr(fn, "at_u"):
        raise ValueError(f"{fn.label} is not a function on GL_n*")
    return OfU(fn)


def bracket_from_gradients(grad_f: GradientPair, grad_g: GradientPair) -> Fraction:
    """1/2 (<<R_D gL f, gL g>> - <<R_D gR f, gR g>>)."""
    left = r_double(grad_f.left).pairing(grad_g.left)
    right = r_double(grad_f.right).pairing(grad_g.right)
    return HALF * (left - right)


def std_from_gradients(grad_f: MatrixGradient, grad_g: MatrixGradient) -> Fraction:
    """1/2 (<R gL f, gL g> - <R gR f, gR g>)."""
    left = trace_form(r_std(grad_f.left), grad_g.left)
    right = trace_form(r_std(grad_f.right), grad_g.right)
    return HALF * (left - right)


class DoubleBracket(BaseBracket):
    """Poisson-Lie bracket {,}_D on D(GL_n)."""

    point_kind = "double"

    def __init__(self, cache=None):
        super().__init__("double", cache)

    def gradient(self, fn, point: DoublePoint) -> GradientPair:
        return gradients(fn, point.X, point.Y)

    def from_gradients(self, grad_f: GradientPair, grad_g: GradientPair) -> Fraction:
        return bracket_from_gradients(grad_f, grad_g)

    def sample_point(self, n: int, rng: random.Random, bound: int | None = None) -> DoublePoint:
        return sample_double_point(n, rng, bound)


class StandardBracket(BaseBracket):
    """Standard Poisson-Lie bracket {,}_r on GL_n.

    Points are single matrices; a diagonal DoublePoint (X, X) is accepted and
    read as X.
    """

    point_kind = "diagonal"

    def __init__(self, cache=None):
        super().__init__("std", cache)

    @staticmethod
    def _matrix(point) -> Mat:
        return point.X if isinstance(point, DoublePoint) else point

    def point_digest(self, point) -> str:
        if isinstance(point, DoublePoint):
            return point.digest
        return DoublePoint(X=point, Y=point).digest

    def gradient(self, fn, point) -> MatrixGradient:
        return matrix_gradients(fn, self._matrix(point))

    def from_gradients(self, grad_f: MatrixGradient, grad_g: MatrixGradient) -> Fraction:
        return std_from_gradients(grad_f, grad_g)

    def sample_point(self, n: int, rng: random.Random, bound: int | None = None) -> DoublePoint:
        return sample_diagonal_point(n, rng, bound)

    def prepare(self, fns):
        # Functions on the double are read through the diagonal.
        return [DiagonalRestriction(fn) if getattr(fn, "arity", 2) == 2 else fn for fn in fns]


class DualBracket(BaseBracket):
    """Bracket {,}_* on GL_n*, computed as {,}_D on the subgroup G_r through U = X^-1 Y."""

    point_kind = "dual"

    def __init__(self, cache=None):
        super().__init__("dual", cache)

    def gradient(self, fn, point: DualPoint) -> GradientPair:
        return gradients(as_function_of_u(fn), point.bplus, point.bminus)

    def from_gradients(self, grad_f: GradientPair, grad_g: GradientPair) -> Fraction:
        return bracket_from_gradients(grad_f, grad_g)

    def sample_point(self, n: int, rng: random.Random, bound: int | None = None) -> DualPoint:
        return sample_dual_point(n, rng, bound)

    def prepare(self, fns):
        return [as_function_of_u(fn) for fn in fns]


def bracket_double(F: Callable, G: Callable, p: DoublePoint) -> Fraction:
    """{F, G}_D at p."""
    return bracket_from_gradients(gradients(F, p.X, p.Y), gradients(G, p.X, p.Y))


def bracket_std(f: Callable, g: Callable, X: Mat) -> Fraction:
    """{f, g}_r at X for evaluators of a single matrix."""
    return std_from_gradients(matrix_gradients(f, X), matrix_gradients(g, X))


def bracket_dual(f: Callable, g: Callable, q: DualPoint) -> Fraction:
    """{f, g}_* at the point U = bplus^-1 bminus."""
    F, G = as_function_of_u(f), as_function_of_u(g)
    return bracket_from_gradients(gradients(F, q.bplus, q.bminus), gradients(G, q.bplus, q.bminus))
