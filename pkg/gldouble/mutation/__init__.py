"""Generalized cluster mutation and regularity testing."""
from gldouble.mutation.divisibility import (
    AffineLine,
    DivisibilityVerdict,
    all_coordinates,
    check_divisibility,
    restrict,
)
from gldouble.mutation.matrix import mutate_coefficients, mutate_matrix
from gldouble.mutation.state import (
    ExchangeNumerator,
    MutatedVariable,
    MutationState,
    exchange_value,
    mutate_seed,
    point_matrices,
    mutate_sequence,
)

__all__ = [
    "AffineLine",
    "DivisibilityVerdict",
    "ExchangeNumerator",
    "MutatedVariable",
    "MutationState",
    "all_coordinates",
    "check_divisibility",
    "exchange_value",
    "mutate_coefficients",
    "mutate_matrix",
    "mutate_seed",
    "point_matrices",
    "mutate_sequence",
    "restrict",
]
