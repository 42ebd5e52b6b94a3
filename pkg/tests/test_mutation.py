"""Tests for matrix, coefficient and seed mutation and the divisibility test."""
import random
from fractions import Fraction

import pytest

from gldouble.errors import DegreeBoundError, MutationError, ResampleRequired
from gldouble.exact import Mat
from gldouble.family import (
    DoublePoint,
    Entry,
    Product,
    enumerate_family,
    g,
    pencil_exchange_sign,
    phi,
    sample_double_point,
)
from gldouble.identity import PencilDeterminant
from gldouble.mutation import (
    AffineLine,
    ExchangeNumerator,
    MutationState,
    check_divisibility,
    exchange_value,
    mutate_coefficients,
    mutate_matrix,
    mutate_seed,
    mutate_sequence,
    restrict,
)
from gldouble.poisson import OmegaMatrix, log_canonical_check


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matrix_mutation_is_an_involution(n, initial_seed):
    """mu_k mu_k B~ = B~ for every mutable k."""
    B = initial_seed(n).exchange
    for k in B.rows:
        assert mutate_matrix(mutate_matrix(B, k), k) == B


@pytest.mark.parametrize("n", [2, 3])
def test_matrix_mutation_invariants(n, initial_seed):
    """Row gcds, stable congruences mod d and skew-symmetrizability survive mutation."""
    B = initial_seed(n).exchange
    for k in B.rows:
        once = mutate_matrix(B, k)
        assert once.is_skew_symmetrizable()
        for label in B.rows:
            assert once.row_gcd(label) == B.row_gcd(label)
            d = B.order(label)
            for col in B.stable:
                assert (once.entry(label, col) - B.entry(label, col)) % d == 0


def test_matrix_mutation_n2_at_g22(initial_seed):
    """Hand-mutated B~ of Q_2 at g_2_2."""
    once = mutate_matrix(initial_seed(2).exchange, "g_2_2")
    assert [list(row) for row in once.entries] == [
        [0, 1, -1, 1, -1, 0, 0],
        [-1, 0, 0, 0, 1, 0, 1],
        [2, 0, 0, -1, 0, -1, 0],
    ]


def test_matrix_mutation_rejects_stable_vertex(initial_seed):
    """Stable and isolated vertices cannot be mutated."""
    seed = initial_seed(2)
    with pytest.raises(MutationError):
        mutate_matrix(seed.exchange, "g_1_1")
    with pytest.raises(MutationError):
        mutate_seed(MutationState.initial(seed), "c_1")


def test_coefficient_mutation(initial_seed):
    """Only the string at k is reversed; twice restores it."""
    strings = initial_seed(3).strings
    once = mutate_coefficients(strings, "phi_1_1")
    assert once["phi_1_1"].coefficients == tuple(reversed(strings["phi_1_1"].coefficients))
    assert once["g_2_2"] == strings["g_2_2"]
    assert mutate_coefficients(once, "phi_1_1") == strings
    assert mutate_coefficients(strings, "g_2_2")["g_2_2"] == strings["g_2_2"]


def test_exchange_relation_n2_at_g22(initial_seed):
    """x'_g22 = x_11 y_22 - x_21 y_12."""
    state = MutationState.initial(initial_seed(2))
    p = DoublePoint(X=Mat([[2, 1], [3, 5]]), Y=Mat([[1, 4], [2, 7]]))
    assert exchange_value(state, "g_2_2", p) == 2 * 7 - 3 * 4


def test_exchange_value_times_variable_is_the_sum(initial_seed, double_points):
    """x_k x'_k equals the exchange sum for every mutable k."""
    seed = initial_seed(3)
    state = MutationState.initial(seed)
    p = double_points(3, 1)[0]
    for k in seed.mutable:
        numerator = ExchangeNumerator(seed, k)
        x_k = seed.function(k)(p.X, p.Y)
        assert exchange_value(state, k, p) * x_k == sum(numerator.terms(p.X, p.Y))


@pytest.mark.parametrize("n", [3, 4])
def test_exchange_at_phi11_is_the_pencil(n, initial_seed, double_points):
    """x'_phi11 phi_11 = sigma det(s12 phi12 X + s21 phi21 Y)."""
    state = MutationState.initial(initial_seed(n))
    pencil = PencilDeterminant(n)
    for p in double_points(n, 2):
        value = exchange_value(state, "phi_1_1", p) * phi(n, 1, 1)(p.X, p.Y)
        assert value == pencil_exchange_sign(n) * pencil(p.X, p.Y)


def test_exchange_value_resamples_on_zero(initial_seed):
    """A vanishing x_k asks for a new point."""
    state = MutationState.initial(initial_seed(2))
    p = DoublePoint(X=Mat([[1, 0], [0, 1]]), Y=Mat([[1, 0], [0, 1]]))
    with pytest.raises(ResampleRequired):
        exchange_value(state, "phi_1_1", p)


@pytest.mark.parametrize("n", [2, 3])
def test_mutating_twice_restores_values(n, initial_seed, double_points):
    """x''_k = x_k at sample points."""
    seed = initial_seed(n)
    initial = MutationState.initial(seed)
    points = double_points(n, 3)
    for k in seed.mutable:
        twice = mutate_sequence(initial, [k, k])
        assert twice.history == (k, k)
        for p in points:
            assert twice.variable(k)(p.X, p.Y) == seed.function(k)(p.X, p.Y)


def _integer_values(variable, n, rng, count):
    values = []
    while len(values) < count:
        p = sample_double_point(n, rng)
        try:
            values.append(Fraction(variable(p.X, p.Y)))
        except ZeroDivisionError:
            continue
    return values


@pytest.mark.parametrize("n", [2, 3])
def test_depth_one_exchanges_are_regular(n, initial_seed, rng):
    """x_k divides every exchange numerator, and x'_k is integral at 20 integer points."""
    seed = initial_seed(n)
    initial = MutationState.initial(seed)
    for k in seed.mutable:
        verdict = check_divisibility(ExchangeNumerator(seed, k), seed.function(k), n, rng=rng)
        assert verdict.status == "divisible-evidence", k
        assert verdict.witness is None

        variable = mutate_seed(initial, k).variable(k)
        assert variable.depth == 1
        values = _integer_values(variable, n, rng, 20)
        assert all(v.denominator == 1 for v in values), k


def _adjacent_vertices(seed, n):
    if n < 4:
        return list(seed.mutable)
    picked = [k for k in seed.mutable if k != "phi_1_1"][:5]
    return picked + ["phi_1_1"]


@pytest.mark.parametrize(
    "n, points",
    [(2, 4), (3, 4), pytest.param(4, 3, marks=pytest.mark.slow)],
)
def test_adjacent_clusters_are_log_canonical(n, points, initial_seed, certify_log_canonical):
    """Every adjacent extended cluster has a constant Omega; no vertex goes unchecked."""
    seed = initial_seed(n)
    vertices = _adjacent_vertices(seed, n)
    if n < 4:
        assert vertices == list(seed.mutable)
    else:
        assert len(set(vertices)) == 6 and "phi_1_1" in vertices

    for k in vertices:
        state = mutate_seed(MutationState.initial(seed), k)
        result = certify_log_canonical(state.seed.cluster, n, points)
        assert isinstance(result, OmegaMatrix), k
        assert result.is_skew_symmetric(), k
        assert result.size == len(seed.labels), k


def test_mutation_depth_limit(initial_seed):
    """Histories longer than the configured depth are refused."""
    state = MutationState.initial(initial_seed(2))
    with pytest.raises(MutationError):
        mutate_sequence(state, ["g_2_2", "h_2_2", "g_2_2"], max_depth=2)


def test_mutated_labels_record_history(initial_seed):
    """The new variable is named after its vertex and history."""
    state = mutate_sequence(MutationState.initial(initial_seed(2)), ["g_2_2", "h_2_2"])
    assert state.variable("h_2_2").label == "h_2_2@g_2_2.h_2_2"
    assert state.variable("h_2_2").depth == 1
    assert state.depth_at("g_2_2") == 1


def test_divisibility_of_an_explicit_factor():
    """det X divides det X * x_11."""
    n = 2
    verdict = check_divisibility(
        Product(g(n, 1, 1), Entry("X", 1, 1)), g(n, 1, 1), n, trials=10, rng=random.Random(3)
    )
    assert verdict.divisible
    assert verdict.status == "divisible-evidence"
    assert verdict.trials == 10


def test_divisibility_witness():
    """det X does not divide x_11; the witness line is reported."""
    n = 2
    verdict = check_divisibility(Entry("X", 1, 1), g(n, 1, 1), n, trials=10, rng=random.Random(3))
    assert not verdict.divisible
    assert verdict.status == "not-divisible"
    assert "line" in verdict.witness
    assert verdict.witness["remainder"] != "0"


@pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.slow)])
def test_pencil_divisible_by_phi11(n):
    """phi_11 divides det(s12 phi12 X + s21 phi21 Y)."""
    verdict = check_divisibility(PencilDeterminant(n), phi(n, 1, 1), n, trials=20, rng=random.Random(n))
    assert verdict.divisible


def test_restrict_enforces_degree_bound():
    """A function of degree two is caught when declared linear."""
    n = 2
    line = AffineLine(Mat.identity(n), Mat.identity(n), Mat([[1, 2], [0, 1]]), Mat([[0, 0], [1, 0]]))
    assert restrict(Entry("X", 1, 1), line, 1) == [1, 1]
    with pytest.raises(DegreeBoundError):
        restrict(g(n, 1, 1), line, 1)


def test_family_degrees_are_bounds(rng):
    """Polynomial family members restrict within their declared degree."""
    n = 3
    fns = enumerate_family(n)
    for _ in range(3):
        base = Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        line = AffineLine(
            Mat.identity(n),
            base,
            Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]),
            Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]),
        )
        for fn in fns:
            if fn.kind != "phi":
                restrict(fn, line, fn.degree)
