"""Probabilistic regularity test: does D divide N as polynomials?

Both are restricted to random affine lines through integer points. Their
univariate restrictions are interpolated exactly and divided over QQ; a
non-zero remainder on any line is a definitive witness of non-divisibility.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Literal, Sequence

from sympy import QQ, Poly, Rational, Symbol

from gldouble.config import settings
from gldouble.errors import DegreeBoundError, ResampleExhausted
from gldouble.exact import Jet, Mat, interpolate
from gldouble.exact.pencil import evaluate_polynomial

logger = logging.getLogger(__name__)

Coordinate = tuple[Literal["X", "Y"], int, int]

_t = Symbol("t")


def all_coordinates(n: int, which: Sequence[str] = ("X", "Y")) -> list[Coordinate]:
    """Every entry (which, i, j) of the listed matrices, 1-based."""
    return [(w, i, j) for w in which for i in range(1, n + 1) for j in range(1, n + 1)]


@dataclass(frozen=True)
class AffineLine:
    """t -> (X0 + t dX, Y0 + t dY)."""

    X0: Mat
    Y0: Mat
    dX: Mat
    dY: Mat

    def at(self, t: Fraction) -> tuple[Mat, Mat]:
        return self.X0 + self.dX.scale(t), self.Y0 + self.dY.scale(t)

    def to_strings(self) -> dict:
        return {
            "X0": self.X0.to_strings(),
            "Y0": self.Y0.to_strings(),
            "dX": self.dX.to_strings(),
            "dY": self.dY.to_strings(),
        }


@dataclass
class DivisibilityVerdict:
    divisible: bool
    trials: int
    witness: dict[str, Any] | None = None
    resamples: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "divisible-evidence" if self.divisible else "not-divisible"


def _plain(value) -> Fraction:
    return value.val if isinstance(value, Jet) else Fraction(value)


def restrict(fn: Callable, line: AffineLine, degree: int) -> list[Fraction]:
    """Coefficients of t -> fn(line(t)), checked against the degree bound at one extra node.

    Raises:
        DegreeBoundError: The extra node disagrees with the interpolant
        ZeroDivisionError: fn is undefined at one of the nodes
    """
    values = [_plain(fn(*line.at(Fraction(t)))) for t in range(degree + 2)]
    coeffs = interpolate(values[: degree + 1])
    if evaluate_polynomial(coeffs, Fraction(degree + 1)) != values[degree + 1]:
        raise DegreeBoundError(f"{getattr(fn, 'label', fn)} exceeds its degree bound {degree} on the line")
    return coeffs


def to_poly(coeffs: Sequence[Fraction]) -> Poly:
    return Poly(
        [Rational(c.numerator, c.denominator) for c in reversed(coeffs)] or [0],
        _t,
        domain=QQ,
    )


def _random_line(
    n: int, support: Sequence[Coordinate], rng: random.Random, bound: int, fixed_x: bool
) -> AffineLine:
    def base() -> Mat:
        return Mat([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])

    X0 = Mat.identity(n) if fixed_x else base()
    Y0 = base()
    dX = [[0] * n for _ in range(n)]
    dY = [[0] * n for _ in range(n)]
    for which, i, j in support:
        if fixed_x and which == "X":
            continue
        target = dX if which == "X" else dY
        target[i - 1][j - 1] = rng.randint(-bound, bound)
    return AffineLine(X0, Y0, Mat(dX), Mat(dY))


def check_divisibility(
    N: Callable,
    D: Callable,
    n: int,
    entry_support: Sequence[Coordinate] | None = None,
    trials: int | None = None,
    rng: random.Random | None = None,
    degree_n: int | None = None,
    degree_d: int | None = None,
    fixed_x: bool = False,
    bound: int | None = None,
) -> DivisibilityVerdict:
    """
    Test whether D divides N along random affine lines.

    Args:
        N: Numerator evaluator on (X, Y)
        D: Denominator evaluator on (X, Y)
        n: Matrix size
        entry_support: Coordinates the lines move along; all 2n^2 entries if None
        trials: Number of lines with a non-constant restriction of D
        rng: Source of randomness
        degree_n: Degree bound for N; read from `N.degree` if None
        degree_d: Degree bound for D; read from `D.degree` if None
        fixed_x: Keep X at the identity (lines in U = Y for functions on GL_n*)
        bound: Integer range for base points and directions

    Returns:
        DivisibilityVerdict, with a witness line when D does not divide N

    Raises:
        ResampleExhausted: Too many lines were degenerate
    """
    trials = trials or settings.divisibility_trials
    rng = rng or random.Random(settings.default_seed)
    bound = bound or settings.sample_bound
    support = list(entry_support) if entry_support is not None else all_coordinates(n)
    degree_n = degree_n if degree_n is not None else getattr(N, "degree")
    degree_d = degree_d if degree_d is not None else getattr(D, "degree")

    done = 0
    resamples = 0
    notes: list[str] = []
    while done < trials:
        line = _random_line(n, support, rng, bound, fixed_x)
        try:
            d_coeffs = restrict(D, line, degree_d)
            n_coeffs = restrict(N, line, degree_n)
        except ZeroDivisionError:
            d_coeffs = None
        if d_coeffs is None or to_poly(d_coeffs).degree() < 1:
            resamples += 1
            if resamples > settings.resample_limit:
                raise ResampleExhausted(
                    f"{resamples} degenerate lines while testing {getattr(N, 'label', N)} "
                    f"by {getattr(D, 'label', D)}"
                )
            continue

        d_poly, n_poly = to_poly(d_coeffs), to_poly(n_coeffs)
        remainder = n_poly.rem(d_poly)
        if not remainder.is_zero:
            witness = {
                "line": line.to_strings(),
                "remainder": str(remainder.as_expr()),
                "numerator": str(n_poly.as_expr()),
                "denominator": str(d_poly.as_expr()),
            }
            if d_poly.degree() == 1:
                # affine along the line: report the root and N's value there
                c0, c1 = d_coeffs[0], d_coeffs[1]
                root = -c0 / c1
                witness["root"] = f"{root.numerator}/{root.denominator}"
                value = evaluate_polynomial(n_coeffs, root)
                witness["numerator_at_root"] = f"{value.numerator}/{value.denominator}"
            logger.info("Divisibility witness found", extra={"trial": done, "resamples": resamples})
            return DivisibilityVerdict(False, done + 1, witness, resamples, notes)
        done += 1

    return DivisibilityVerdict(True, done, None, resamples, notes)
