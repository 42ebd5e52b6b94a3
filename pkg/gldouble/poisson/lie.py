"""The Lie algebra side: R-matrices on gl_n and the splitting of gl_n + gl_n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gldouble.exact import Mat

HALF = Fraction(1, 2)


def strict_upper(xi: Mat) -> Mat:
    n = xi.n
    return Mat._wrap(tuple(tuple(xi[i, j] if j > i else Fraction(0) for j in range(n)) for i in range(n)), n)


def strict_lower(xi: Mat) -> Mat:
    n = xi.n
    return Mat._wrap(tuple(tuple(xi[i, j] if j < i else Fraction(0) for j in range(n)) for i in range(n)), n)


def diagonal_part(xi: Mat) -> Mat:
    return Mat.diagonal([xi[i, i] for i in range(xi.n)])


def r_std(xi: Mat) -> Mat:
    """R = pi_>0 - pi_<0; the Cartan part goes to zero."""
    return strict_upper(xi) - strict_lower(xi)


def r_plus(xi: Mat) -> Mat:
    """R_+ = (R + Id)/2: strictly upper part plus half the diagonal."""
    return strict_upper(xi) + diagonal_part(xi).scale(HALF)


def r_minus(xi: Mat) -> Mat:
    """R_- = (R - Id)/2: minus the strictly lower part minus half the diagonal."""
    return -(strict_lower(xi) + diagonal_part(xi).scale(HALF))


def trace_form(a: Mat, b: Mat) -> Fraction:
    """<a, b> = tr(ab)."""
    n = a.n
    return sum((a[i, k] * b[k, i] for i in range(n) for k in range(n)), Fraction(0))


@dataclass(frozen=True)
class LiePair:
    """Element (a, b) of the double Lie algebra gl_n + gl_n."""

    a: Mat
    b: Mat

    def __post_init__(self):
        if self.a.shape != self.b.shape:
            raise ValueError(f"LiePair components differ in shape: {self.a.shape} vs {self.b.shape}")

    @classmethod
    def zero(cls, n: int) -> LiePair:
        return cls(Mat.zeros(n, n), Mat.zeros(n, n))

    def __add__(self, other: LiePair) -> LiePair:
        return LiePair(self.a + other.a, self.b + other.b)

    def __sub__(self, other: LiePair) -> LiePair:
        return LiePair(self.a - other.a, self.b - other.b)

    def __neg__(self) -> LiePair:
        return LiePair(-self.a, -self.b)

    def scale(self, c) -> LiePair:
        return LiePair(self.a.scale(c), self.b.scale(c))

    def pairing(self, other: LiePair) -> Fraction:
        """<<(a,b),(a',b')>> = tr(aa') - tr(bb')."""
        return trace_form(self.a, other.a) - trace_form(self.b, other.b)

    def in_d_plus(self) -> bool:
        """Membership in the diagonal subalgebra {(xi, xi)}."""
        return self.a == self.b

    def in_d_minus(self) -> bool:
        """Membership in {(R_+ xi, R_- xi)}."""
        eta = self.a - self.b
        return self.a == r_plus(eta) and self.b == r_minus(eta)


def double_decompose(v: LiePair) -> tuple[LiePair, LiePair]:
    """Split v = plus + minus with plus in d_+ and minus in d_-."""
    eta = v.a - v.b
    minus = LiePair(r_plus(eta), r_minus(eta))
    xi = v.a - minus.a
    return LiePair(xi, xi), minus


def r_double(v: LiePair) -> LiePair:
    """R_D = pi_d+ - pi_d-."""
    plus, minus = double_decompose(v)
    return plus - minus
