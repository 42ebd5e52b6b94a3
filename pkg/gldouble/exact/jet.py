"""First-order jets a + b*eps (eps^2 = 0) over the rationals, and matrices of them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gldouble.errors import DimensionError
from gldouble.exact.matrix import Mat, MatrixLike, to_scalar


@dataclass(frozen=True, slots=True)
class Jet:
    """Truncated number val + der*eps."""

    val: Fraction
    der: Fraction = Fraction(0)

    @staticmethod
    def lift(x) -> Jet:
        if isinstance(x, Jet):
            return x
        return Jet(to_scalar(x), Fraction(0))

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.der + other.der)
        if isinstance(other, (int, Fraction)):
            return Jet(self.val + other, self.der)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Jet:
        return Jet(-self.val, -self.der)

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val - other.val, self.der - other.der)
        if isinstance(other, (int, Fraction)):
            return Jet(self.val - other, self.der)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Jet(other - self.val, -self.der)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val * other.val, self.val * other.der + self.der * other.val)
        if isinstance(other, (int, Fraction)):
            return Jet(self.val * other, self.der * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Jet(to_scalar(other))
        if not isinstance(other, Jet):
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError("jet division by a value with zero real part")
        inv = 1 / other.val
        return Jet(self.val * inv, (self.der * other.val - self.val * other.der) * inv * inv)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Jet(to_scalar(other)) / self
        return NotImplemented

    def __pow__(self, k: int) -> Jet:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Jet(Fraction(1)) / (self ** (-k))
        if k == 0:
            return Jet(Fraction(1))
        # (a + b eps)^k = a^k + k a^(k-1) b eps
        return Jet(self.val**k, k * self.val ** (k - 1) * self.der)

    def __eq__(self, other) -> bool:
        if isinstance(other, Jet):
            return self.val == other.val and self.der == other.der
        if isinstance(other, (int, Fraction)):
            return self.der == 0 and self.val == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.val, self.der))

    def __repr__(self) -> str:
        return f"Jet({self.val} + {self.der}eps)"


def value_part(x) -> Fraction:
    """Real part of a Jet, or the scalar itself."""
    return x.val if isinstance(x, Jet) else x


class JetMat(MatrixLike):
    """Matrix val + der*eps stored as two rational matrices."""

    __slots__ = ("val", "der")

    def __init__(self, val: Mat, der: Mat):
        if val.shape != der.shape:
            raise DimensionError(f"jet parts differ in shape: {val.shape} vs {der.shape}")
        self.val = val
        self.der = der

    @classmethod
    def lift(cls, m: MatrixLike) -> JetMat:
        if isinstance(m, JetMat):
            return m
        return cls(m, Mat.zeros(*m.shape))

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[Jet]]) -> JetMat:
        return cls(
            Mat([[Jet.lift(x).val for x in row] for row in entries]),
            Mat([[Jet.lift(x).der for x in row] for row in entries]),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.val.shape

    def __getitem__(self, index: tuple[int, int]) -> Jet:
        return Jet(self.val[index], self.der[index])

    def __repr__(self) -> str:
        return f"JetMat(val={self.val!r}, der={self.der!r})"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> JetMat:
        rows, cols = list(rows), list(cols)
        return JetMat(self.val.submatrix(rows, cols), self.der.submatrix(rows, cols))

    def hstack(self, *others: MatrixLike) -> JetMat:
        lifted = [JetMat.lift(o) for o in others]
        return JetMat(
            self.val.hstack(*(o.val for o in lifted)),
            self.der.hstack(*(o.der for o in lifted)),
        )

    def identity_like(self) -> JetMat:
        return JetMat.lift(Mat.identity(self.n))

    def trace(self) -> Jet:
        return Jet(self.val.trace(), self.der.trace())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (Mat, JetMat)):
            o = JetMat.lift(other)
            return JetMat(self.val + o.val, self.der + o.der)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Mat, JetMat)):
            o = JetMat.lift(other)
            return JetMat(self.val - o.val, self.der - o.der)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Mat):
            return JetMat.lift(other) - self
        return NotImplemented

    def __neg__(self) -> JetMat:
        return JetMat(-self.val, -self.der)

    def __mul__(self, c):
        if isinstance(c, Jet):
            return JetMat(self.val.scale(c.val), self.der.scale(c.val) + self.val.scale(c.der))
        if isinstance(c, (int, Fraction)):
            return JetMat(self.val.scale(c), self.der.scale(c))
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            return JetMat(self.val @ other, self.der @ other)
        if isinstance(other, JetMat):
            return JetMat(self.val @ other.val, self.val @ other.der + self.der @ other.val)
        return NotImplemented

    # -- determinants and inverses -----------------------------------------

    def det(self) -> Jet:
        # Jacobi: d det(M) = tr(adj(M) dM)
        value = self.val.det()
        if not any(any(row) for row in self.der.rows):
            return Jet(value)
        return Jet(value, (self.val.adjugate() @ self.der).trace())

    def inverse(self) -> JetMat:
        inv = self.val.inverse()
        return JetMat(inv, -(inv @ self.der @ inv))
