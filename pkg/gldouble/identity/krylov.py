"""Krylov matrices, the long determinantal identity and its specialization to the pencil."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from gldouble.errors import DimensionError, ResampleRequired
from gldouble.exact import Mat
from gldouble.family.functions import phi
from gldouble.family.points import DoublePoint
from gldouble.family.signs import pencil_exchange_sign, sign_skl
from gldouble.mutation.state import exchange_value

logger = logging.getLogger(__name__)

# (-1)^(n(n-1)/2) by n mod 4
_TRIANGULAR_SIGN = {0: 1, 1: 1, 2: -1, 3: -1}


def triangular_sign(n: int) -> int:
    return _TRIANGULAR_SIGN[n % 4]


def _column(x) -> Mat:
    if isinstance(x, Mat):
        if x.shape[1] != 1:
            raise DimensionError(f"expected a column vector, got shape {x.shape}")
        return x
    return Mat([[c] for c in x])


@dataclass(frozen=True)
class KrylovData:
    A: Mat
    u: Mat
    v: Mat
    gamma: Mat
    gamma1: Mat
    gamma2: Mat
    w: Mat
    gamma_star: Mat

    @property
    def n(self) -> int:
        return self.A.n


def build_krylov(A: Mat, u, v) -> KrylovData:
    """Gamma(u), Gamma_1(u,v), Gamma_2(u,v), the last adjugate row w of Gamma_1, and Gamma*(u,v)."""
    n = A.n
    u, v = _column(u), _column(v)
    if u.shape[0] != n or v.shape[0] != n:
        raise DimensionError(f"vectors must have length {n}")

    krylov = [u]
    for _ in range(n - 1):
        krylov.append(A @ krylov[-1])
    gamma = krylov[0].hstack(*krylov[1:])
    tail = krylov[: n - 1]
    gamma1 = v.hstack(*tail)
    gamma2 = (A @ v).hstack(*tail)

    w = Mat([gamma1.adjugate().rows[n - 1]])
    rows = [w]
    for _ in range(n - 1):
        rows.append(rows[-1] @ A)
    gamma_star = Mat([r.rows[0] for r in rows])
    return KrylovData(A=A, u=u, v=v, gamma=gamma, gamma1=gamma1, gamma2=gamma2, w=w, gamma_star=gamma_star)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_long_identity(A: Mat, u, v) -> IdentityReport:
    """det(det G1 A - det G2 I) against (-1)^(n(n-1)/2) det G(u) det G*(u,v)."""
    data = build_krylov(A, u, v)
    n = data.n
    d1, d2 = data.gamma1.det(), data.gamma2.det()
    lhs = (A.scale(d1) - Mat.identity(n).scale(d2)).det()
    rhs = triangular_sign(n) * data.gamma.det() * data.gamma_star.det()
    return IdentityReport(n=n, lhs=lhs, rhs=rhs)


def unit_vector(n: int, i: int) -> Mat:
    """e_i as a column, 1-based."""
    return Mat([[1 if r == i - 1 else 0] for r in range(n)])


@dataclass(frozen=True)
class CorollaryReport:
    n: int
    pencil_det: Fraction
    phi11: Fraction
    P: Fraction
    exchange_value: Fraction | None = None
    expected_sign: int | None = None

    @property
    def equal(self) -> bool:
        return self.pencil_det == self.phi11 * self.P

    @property
    def measured_sign(self) -> int | None:
        """x'_phi11 / P, which is +1 or -1 when the exchange relation is the pencil up to sign."""
        if self.exchange_value is None or self.P == 0:
            return None
        ratio = self.exchange_value / self.P
        return int(ratio) if ratio in (1, -1) else None

    @property
    def sign_consistent(self) -> bool | None:
        if self.exchange_value is None:
            return None
        return self.measured_sign is not None and self.measured_sign == self.expected_sign


class PencilDeterminant:
    """(X, Y) -> det(s_12 phi_12 X + s_21 phi_21 Y), the left side of the pencil factorization."""

    def __init__(self, n: int):
        if n <= 2:
            raise ValueError("the pencil factorization is stated for n > 2")
        self.n = n
        self.label = "pencil"
        self.phi12, self.phi21 = phi(n, 1, 2), phi(n, 2, 1)
        self.s12, self.s21 = sign_skl(n, 1, 2), sign_skl(n, 2, 1)

    @property
    def degree(self) -> int:
        return self.n * (self.phi12.degree + 1)

    def __call__(self, X: Mat, Y: Mat) -> Fraction:
        a, b = self.s12 * self.phi12(X, Y), self.s21 * self.phi21(X, Y)
        return (X.scale(a) + Y.scale(b)).det()


def corollary_polynomial(X: Mat, Y: Mat) -> Fraction:
    """P = s_11 (-1)^(n(n-1)/2) (det X)^((n-1)(n-2)) det Gamma*(e_n, e_(n-1)) with A = X^-1 Y."""
    n = X.n
    A = X.inverse() @ Y
    data = build_krylov(A, unit_vector(n, n), unit_vector(n, n - 1))
    return sign_skl(n, 1, 1) * triangular_sign(n) * X.det() ** ((n - 1) * (n - 2)) * data.gamma_star.det()


def verify_corollary(X: Mat, Y: Mat, state=None) -> CorollaryReport:
    """Check det(s12 phi12 X + s21 phi21 Y) = phi11 P, optionally against the exchange relation at phi_11.

    Raises:
        ValueError: n <= 2
        ResampleRequired: phi_11 vanishes at (X, Y)
    """
    n = X.n
    if n <= 2:
        raise ValueError("the pencil factorization is stated for n > 2")
    phi11 = phi(n, 1, 1)(X, Y)
    if phi11 == 0:
        raise ResampleRequired("phi_1_1 vanishes at the sample point")
    pencil = PencilDeterminant(n)(X, Y)
    P = corollary_polynomial(X, Y)

    exchange = None
    if state is not None:
        exchange = exchange_value(state, "phi_1_1", DoublePoint(X=X, Y=Y))
    return CorollaryReport(
        n=n,
        pencil_det=pencil,
        phi11=phi11,
        P=P,
        exchange_value=exchange,
        expected_sign=pencil_exchange_sign(n),
    )
