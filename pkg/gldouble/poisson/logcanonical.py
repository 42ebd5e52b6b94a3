"""Log-canonicality and Casimir certification at sample points."""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from gldouble.errors import ResampleRequired
from gldouble.poisson.base import BaseBracket
from gldouble.poisson.router import BracketRouter

logger = logging.getLogger(__name__)


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class OmegaMatrix:
    """Constant coefficients omega_ij with {x_i, x_j} = omega_ij x_i x_j.

    Entries are None for pairs that were not sampled.
    """

    labels: tuple[str, ...]
    entries: tuple[tuple[Optional[Fraction], ...], ...]

    def __getitem__(self, pair: tuple[str, str]) -> Optional[Fraction]:
        i, j = (self.labels.index(x) for x in pair)
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.labels)

    def is_skew_symmetric(self) -> bool:
        return all(
            self.entries[i][j] is None or self.entries[i][j] == -self.entries[j][i]
            for i in range(self.size)
            for j in range(self.size)
        )

    def is_integral(self) -> bool:
        return all(w is None or w.denominator == 1 for row in self.entries for w in row)

    def row(self, label: str) -> tuple[Optional[Fraction], ...]:
        return self.entries[self.labels.index(label)]

    def is_zero_row(self, label: str) -> bool:
        return all(w in (None, 0) for w in self.row(label))

    def to_strings(self) -> list[list[Optional[str]]]:
        return [[None if w is None else _fmt(w) for w in row] for row in self.entries]


@dataclass(frozen=True)
class LogCanonicalViolation:
    """A pair whose normalized bracket differs between two sample points."""

    pair: tuple[str, str]
    points: tuple[int, int]
    ratios: tuple[Fraction, Fraction]
    detail: dict = field(default_factory=dict)

    def describe(self) -> str:
        return (
            f"{{{self.pair[0]}, {self.pair[1]}}}/({self.pair[0]} {self.pair[1]}) = "
            f"{_fmt(self.ratios[0])} at point {self.points[0]} but {_fmt(self.ratios[1])} at point {self.points[1]}"
        )


def _resolve(bracket: BaseBracket | str | None) -> BaseBracket:
    if isinstance(bracket, BaseBracket):
        return bracket
    return BracketRouter().get_bracket(bracket)


def _label(fn: Callable, index: int) -> str:
    return str(getattr(fn, "label", None) or f"f{index}")


def _values(fns: Sequence[Callable], labels: Sequence[str], point, index: int, bracket: BaseBracket) -> list[Fraction]:
    values = []
    for fn, label in zip(fns, labels):
        value = bracket.value(fn, point)
        if value == 0:
            raise ResampleRequired(f"{label} vanishes at sample point {index}")
        values.append(value)
    return values


def log_canonical_check(
    fns: Sequence[Callable],
    points: Sequence,
    bracket: BaseBracket | str | None = None,
    pair_budget: int | None = None,
    rng: random.Random | None = None,
) -> OmegaMatrix | LogCanonicalViolation:
    """
    Certify that {f_i, f_j} / (f_i f_j) is the same rational at every point.

    Args:
        fns: Evaluators in the form the bracket consumes
        points: Sample points, at least two
        bracket: Bracket instance or name; the configured default if None
        pair_budget: Check only this many randomly chosen pairs
        rng: Source of randomness for the pair subset

    Returns:
        OmegaMatrix when every checked pair is constant, else the first violation

    Raises:
        ResampleRequired: A function vanishes at one of the points
    """
    if len(points) < 2:
        raise ValueError(f"log-canonical check needs at least 2 points, got {len(points)}")
    bracket = _resolve(bracket)
    fns = bracket.prepare(list(fns))
    labels = [_label(fn, i) for i, fn in enumerate(fns)]
    m = len(fns)

    pairs = list(itertools.combinations(range(m), 2))
    if pair_budget is not None and pair_budget < len(pairs):
        pairs = sorted((rng or random.Random(0)).sample(pairs, pair_budget))

    values = [_values(fns, labels, p, idx, bracket) for idx, p in enumerate(points)]

    omega: list[list[Optional[Fraction]]] = [[None] * m for _ in range(m)]
    for i in range(m):
        omega[i][i] = Fraction(0)

    for i, j in pairs:
        first = None
        for idx, p in enumerate(points):
            ratio = bracket.bracket(fns[i], fns[j], p) / (values[idx][i] * values[idx][j])
            if first is None:
                first = ratio
            elif ratio != first:
                logger.warning(
                    "Log-canonical violation",
                    extra={"pair": (labels[i], labels[j]), "point": idx, "bracket": bracket.name},
                )
                return LogCanonicalViolation(
                    pair=(labels[i], labels[j]), points=(0, idx), ratios=(first, ratio)
                )
        omega[i][j] = first
        omega[j][i] = -first

    logger.info(
        "Log-canonical check passed",
        extra={"functions": m, "pairs": len(pairs), "points": len(points), "bracket": bracket.name},
    )
    return OmegaMatrix(labels=tuple(labels), entries=tuple(tuple(row) for row in omega))


@dataclass(frozen=True)
class CasimirWitness:
    casimir: str
    function: str
    point: int
    value: Fraction


def casimir_check(
    casimirs: Sequence[Callable],
    fns: Sequence[Callable],
    points: Sequence,
    bracket: BaseBracket | str | None = None,
) -> list[CasimirWitness]:
    """Brackets {c, f} that fail to vanish; an empty list certifies the Casimirs."""
    bracket = _resolve(bracket)
    casimirs = bracket.prepare(list(casimirs))
    fns = bracket.prepare(list(fns))
    witnesses = []
    for idx, p in enumerate(points):
        for c in casimirs:
            for fn in fns:
                value = bracket.bracket(c, fn, p)
                if value != 0:
                    witnesses.append(
                        CasimirWitness(casimir=_label(c, 0), function=_label(fn, 0), point=idx, value=value)
                    )
    return witnesses
