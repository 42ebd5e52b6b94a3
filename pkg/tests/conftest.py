"""Pytest configuration and fixtures."""
import random
from functools import lru_cache

import pytest

from gldouble.family import sample_diagonal_point, sample_double_point, sample_dual_point
from gldouble.harness.campaign import with_resampling
from gldouble.poisson import log_canonical_check
from gldouble.seeds import build_dual_seed, build_initial_seed, diagonal_reduce


@lru_cache(maxsize=None)
def _initial(n):
    return build_initial_seed(n)


@lru_cache(maxsize=None)
def _dual(n):
    return build_dual_seed(n)


@pytest.fixture
def rng():
    """Seeded random source; every test starts from the same state."""
    return random.Random(20240601)


@pytest.fixture
def initial_seed():
    """Builder for the initial seed on D(GL_n), shared across tests."""
    return _initial


@pytest.fixture
def diagonal_seed():
    """Builder for the diagonal reduction of the initial seed."""
    return lambda n: diagonal_reduce(_initial(n))


@pytest.fixture
def dual_seed():
    """Builder for the seed on GL_n*."""
    return _dual


@pytest.fixture
def double_points(rng):
    """Builder for sampled points of D(GL_n)."""
    return lambda n, count: [sample_double_point(n, rng) for _ in range(count)]


@pytest.fixture
def diagonal_points(rng):
    """Builder for sampled diagonal points (X, X)."""
    return lambda n, count: [sample_diagonal_point(n, rng) for _ in range(count)]


@pytest.fixture
def dual_points(rng):
    """Builder for sampled points of GL_n*."""
    return lambda n, count: [sample_dual_point(n, rng) for _ in range(count)]


@pytest.fixture
def certify_log_canonical(rng):
    """Builder running log_canonical_check on fresh points until no function vanishes."""

    def certify(fns, n, count, bracket="double", sampler=sample_double_point, **kwargs):
        def attempt():
            points = [sampler(n, rng) for _ in range(count)]
            return log_canonical_check(fns, points, bracket, rng=rng, **kwargs)

        return with_resampling(attempt, f"log-canonical[{bracket}]")

    return certify
