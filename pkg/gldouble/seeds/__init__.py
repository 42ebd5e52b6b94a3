"""Quivers, exchange matrices, coefficient strings and seeds."""
from gldouble.seeds.exchange_matrix import ExtendedExchangeMatrix, quiver_from_btilde, to_Btilde
from gldouble.seeds.export import to_dot, to_json
from gldouble.seeds.quiver import Quiver, Vertex, build_Qn, resolve_label
from gldouble.seeds.seed import Seed, build_dual_seed, build_initial_seed, diagonal_reduce, dual_label_map
from gldouble.seeds.strings import (
    CoefficientString,
    LaurentMonomial,
    build_strings,
    certify_string,
    cluster_tau_monomials,
    stable_tau_monomials,
)

__all__ = [
    "CoefficientString",
    "ExtendedExchangeMatrix",
    "LaurentMonomial",
    "Quiver",
    "Seed",
    "Vertex",
    "build_Qn",
    "build_dual_seed",
    "build_initial_seed",
    "build_strings",
    "certify_string",
    "cluster_tau_monomials",
    "diagonal_reduce",
    "dual_label_map",
    "quiver_from_btilde",
    "resolve_label",
    "stable_tau_monomials",
    "to_Btilde",
    "to_dot",
    "to_json",
]
