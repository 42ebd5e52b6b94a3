"""Coefficient strings and the stable and cluster tau-monomials read off B~."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from gldouble.errors import OrientationError, StructuralError
from gldouble.exact import exact_root
from gldouble.seeds.exchange_matrix import ExtendedExchangeMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaurentMonomial:
    """prod x_label^exponent with integer exponents; zero exponents are dropped."""

    exponents: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, int] | None = None) -> LaurentMonomial:
        items = sorted((k, e) for k, e in (mapping or {}).items() if e != 0)
        return cls(tuple(items))

    @classmethod
    def one(cls) -> LaurentMonomial:
        return cls()

    def as_dict(self) -> dict[str, int]:
        return dict(self.exponents)

    def __mul__(self, other: LaurentMonomial) -> LaurentMonomial:
        out = self.as_dict()
        for k, e in other.exponents:
            out[k] = out.get(k, 0) + e
        return LaurentMonomial.of(out)

    def __pow__(self, k: int) -> LaurentMonomial:
        return LaurentMonomial.of({x: e * k for x, e in self.exponents})

    @property
    def is_one(self) -> bool:
        return not self.exponents

    @property
    def is_polynomial(self) -> bool:
        return all(e >= 0 for _, e in self.exponents)

    def root(self, d: int) -> LaurentMonomial:
        """The monomial m with m^d = self.

        Raises:
            OrientationError: Some exponent is not divisible by d
        """
        bad = [x for x, e in self.exponents if e % d]
        if bad:
            raise OrientationError(f"{self} has no {d}-th root (exponents of {', '.join(bad)})")
        return LaurentMonomial.of({x: e // d for x, e in self.exponents})

    def evaluate(self, values: Mapping[str, object]):
        result = Fraction(1)
        for x, e in self.exponents:
            result = result * values[x] ** e
        return result

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        return "*".join(x if e == 1 else f"{x}^{e}" for x, e in self.exponents)


def stable_tau_monomials(B: ExtendedExchangeMatrix, label: str) -> tuple[LaurentMonomial, LaurentMonomial]:
    """(v_>, v_<) of a row: stable columns with positive and with negative entries."""
    row = B.row(label)
    greater = {x: row[x] for x in B.stable if row[x] > 0}
    less = {x: -row[x] for x in B.stable if row[x] < 0}
    return LaurentMonomial.of(greater), LaurentMonomial.of(less)


def cluster_tau_monomials(B: ExtendedExchangeMatrix, label: str) -> tuple[LaurentMonomial, LaurentMonomial]:
    """(u_>, u_<) of a row: mutable columns, exponents divided by d_k.

    Raises:
        StructuralError: d_k does not divide an entry of the row on the mutable columns
    """
    row = B.row(label)
    d = B.order(label)
    ragged = [x for x in B.rows if row[x] % d]
    if ragged:
        raise StructuralError(f"d_{label} = {d} does not divide the entries of {label} at {', '.join(ragged)}")
    greater = {x: row[x] // d for x in B.rows if row[x] > 0}
    less = {x: -row[x] // d for x in B.rows if row[x] < 0}
    return LaurentMonomial.of(greater), LaurentMonomial.of(less)


@dataclass(frozen=True)
class CoefficientString:
    """The string p_0..p_d of a mutable vertex."""

    vertex: str
    coefficients: tuple[LaurentMonomial, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def trivial(self) -> bool:
        return self.order == 1

    def reversed(self) -> CoefficientString:
        return CoefficientString(self.vertex, tuple(reversed(self.coefficients)))

    def p_hat(self, B: ExtendedExchangeMatrix, r: int) -> LaurentMonomial:
        """(p_r v_>^r v_<^(d-r))^(1/d), required to be a polynomial monomial.

        Raises:
            OrientationError: The root is not a monomial with non-negative exponents
        """
        d = self.order
        v_greater, v_less = stable_tau_monomials(B, self.vertex)
        value = self.coefficients[r] * v_greater**r * v_less ** (d - r)
        root = value.root(d)
        if not root.is_polynomial:
            raise OrientationError(f"p-hat_{self.vertex},{r} = {root} is not a polynomial")
        return root

    def p_hats(self, B: ExtendedExchangeMatrix) -> list[LaurentMonomial]:
        return [self.p_hat(B, r) for r in range(self.order + 1)]

    def to_strings(self) -> list[str]:
        return [str(p) for p in self.coefficients]


def trivial_string(vertex: str) -> CoefficientString:
    return CoefficientString(vertex, (LaurentMonomial.one(), LaurentMonomial.one()))


def special_string(
    B: ExtendedExchangeMatrix, vertex: str, casimir_label: Callable[[int], str]
) -> CoefficientString:
    """p_0 = p_d = 1 and p_r = c_r^d v_>^-r v_<^(r-d) for 0 < r < d."""
    d = B.order(vertex)
    v_greater, v_less = stable_tau_monomials(B, vertex)
    coeffs = [LaurentMonomial.one()]
    for r in range(1, d):
        c = LaurentMonomial.of({casimir_label(r): d})
        coeffs.append(c * v_greater ** (-r) * v_less ** (r - d))
    coeffs.append(LaurentMonomial.one())
    return CoefficientString(vertex, tuple(coeffs))


def build_strings(
    B: ExtendedExchangeMatrix, casimir_label: Callable[[int], str] = lambda r: f"c_{r}"
) -> dict[str, CoefficientString]:
    """Strings for every mutable vertex; trivial unless the vertex is special.

    Raises:
        OrientationError: Some p-hat of a special string is not polynomial
    """
    strings = {}
    for label in B.rows:
        if B.order(label) == 1:
            strings[label] = trivial_string(label)
        else:
            s = special_string(B, label, casimir_label)
            s.p_hats(B)
            strings[label] = s
            logger.debug("Built special string", extra={"vertex": label, "order": s.order})
    return strings


def certify_string(
    string: CoefficientString,
    B: ExtendedExchangeMatrix,
    values: Mapping[str, Fraction],
    expected: list[Fraction],
) -> list[str]:
    """Numeric certificate at one point: exact d-th roots of p_r v_>^r v_<^(d-r) match `expected`.

    Returns the list of failures (empty on success). For even d the root is
    compared up to sign.
    """
    d = string.order
    v_greater, v_less = stable_tau_monomials(B, string.vertex)
    failures = []
    for r in range(d + 1):
        value = (string.coefficients[r] * v_greater**r * v_less ** (d - r)).evaluate(values)
        root = exact_root(Fraction(value), d)
        want = expected[r]
        if root is None:
            failures.append(f"r={r}: {value} is not an exact {d}-th power")
        elif root != want and not (d % 2 == 0 and root == -want):
            failures.append(f"r={r}: root {root} differs from {want}")
    return failures
