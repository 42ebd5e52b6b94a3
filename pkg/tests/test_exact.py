"""Tests for the exact linear-algebra kernel."""
from fractions import Fraction

import pytest
from sympy import Matrix, Poly, Rational, symbols

from gldouble.errors import DimensionError, SingularMatrixError
from gldouble.exact import Jet, JetMat, Mat, exact_root, interpolate, poly_coeffs_from_pencil


def _random_mat(rng, n, m=None, bound=9):
    m = m or n
    return Mat([[Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(m)] for _ in range(n)])


def _sympy(M):
    return Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in M.rows])


def _frac(r):
    r = Rational(r)
    return Fraction(int(r.p), int(r.q))


def test_det_small_cases():
    """Identity and the 2x2 closed form."""
    assert Mat.identity(3).det() == 1
    assert Mat([[1, 2], [3, 4]]).det() == -2


def test_det_matches_independent_oracle(rng):
    """Bareiss elimination agrees with sympy's Berkowitz determinant."""
    for n in (4, 5, 6):
        M = _random_mat(rng, n)
        assert M.det() == _frac(_sympy(M).det(method="berkowitz"))


def test_det_with_zero_leading_block():
    """Pivot search handles a zero in the top-left corner."""
    M = Mat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert M.det() == 1


def test_det_is_multiplicative(rng):
    """det(AB) = det(A) det(B) exactly."""
    A, B = _random_mat(rng, 4), _random_mat(rng, 4)
    assert (A @ B).det() == A.det() * B.det()


def test_det_rejects_non_square():
    """A 2x3 matrix has no determinant."""
    with pytest.raises(DimensionError):
        Mat([[1, 2, 3], [4, 5, 6]]).det()


def test_adjugate_closed_form():
    """adj [[1,2],[3,4]] = [[4,-2],[-3,1]]."""
    assert Mat([[1, 2], [3, 4]]).adjugate() == Mat([[4, -2], [-3, 1]])
    assert Mat.identity(4).adjugate() == Mat.identity(4)


def test_adjugate_of_singular_matrix(rng):
    """M adj(M) = 0 for a rank-one matrix, and adj(M) M = det(M) I in general."""
    u = [Fraction(rng.randint(1, 5)) for _ in range(3)]
    v = [Fraction(rng.randint(1, 5)) for _ in range(3)]
    rank_one = Mat([[a * b for b in v] for a in u])
    assert rank_one @ rank_one.adjugate() == Mat.zeros(3, 3)

    M = _random_mat(rng, 4)
    assert M.adjugate() @ M == Mat.identity(4).scale(M.det())


def test_inverse_and_singularity():
    """inverse(2I) = I/2; a singular matrix raises with its determinant."""
    assert Mat.identity(3).scale(2).inverse() == Mat.identity(3).scale(Fraction(1, 2))
    with pytest.raises(SingularMatrixError) as err:
        Mat([[1, 2], [2, 4]]).inverse()
    assert err.value.det == 0


def test_power(rng):
    """M^0 = I and M^3 = M M M."""
    M = _random_mat(rng, 4)
    assert M.power(0) == Mat.identity(4)
    assert M.power(3) == M @ M @ M


def test_pencil_coefficients_identity():
    """det(I + lambda I) for n = 2 is (1 + lambda)^2."""
    assert poly_coeffs_from_pencil(Mat.identity(2), Mat.identity(2)) == [1, 2, 1]


def test_pencil_coefficients_match_symbolic_expansion(rng):
    """Interpolated coefficients equal the expansion of det(X + lambda Y) with lambda symbolic."""
    lam = symbols("lam")
    X, Y = _random_mat(rng, 3), _random_mat(rng, 3)
    coeffs = poly_coeffs_from_pencil(X, Y)
    poly = Poly((_sympy(X) + lam * _sympy(Y)).det(method="berkowitz"), lam)
    assert coeffs == [_frac(poly.coeff_monomial(lam**i)) for i in range(4)]
    assert coeffs[0] == X.det()
    assert coeffs[-1] == Y.det()


def test_interpolate_recovers_polynomial():
    """Values of 2 - t + 3t^2 at 0, 1, 2."""
    assert interpolate([2, 4, 12]) == [2, -1, 3]


def test_jet_det_derivative_matches_symbolic(rng):
    """The eps part of det(M + eps D) is d/dt det(M + tD) at t = 0."""
    t = symbols("t")
    M, D = _random_mat(rng, 4), _random_mat(rng, 4)
    value = JetMat(M, D).det()
    poly = Poly((_sympy(M) + t * _sympy(D)).det(method="berkowitz"), t)
    assert value.val == M.det()
    assert value.der == _frac(poly.coeff_monomial(t))


def test_jet_zero_direction_stays_zero(rng):
    """Jets with zero derivative parts produce zero derivative parts."""
    M = _random_mat(rng, 3)
    J = JetMat.lift(M)
    assert J.det().der == 0
    assert (J @ J).det() == Jet(M.det() ** 2)


def test_jet_arithmetic():
    """(a + b eps)(c + d eps) = ac + (ad + bc) eps and division needs a non-zero value part."""
    x, y = Jet(Fraction(2), Fraction(3)), Jet(Fraction(5), Fraction(7))
    assert x * y == Jet(Fraction(10), Fraction(29))
    assert (x * y) / y == x
    with pytest.raises(ZeroDivisionError):
        x / Jet(Fraction(0), Fraction(1))


def test_exact_root():
    """Exact d-th roots or None."""
    assert exact_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert exact_root(Fraction(-8), 3) == -2
    assert exact_root(Fraction(16), 4) == 2
    assert exact_root(Fraction(2), 2) is None
    assert exact_root(Fraction(-4), 2) is None
