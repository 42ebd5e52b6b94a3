"""The long determinantal identity and its pencil specialization."""
from gldouble.identity.krylov import (
    CorollaryReport,
    IdentityReport,
    KrylovData,
    PencilDeterminant,
    build_krylov,
    corollary_polynomial,
    triangular_sign,
    unit_vector,
    verify_corollary,
    verify_long_identity,
)

__all__ = [
    "CorollaryReport",
    "IdentityReport",
    "KrylovData",
    "PencilDeterminant",
    "build_krylov",
    "corollary_polynomial",
    "triangular_sign",
    "unit_vector",
    "verify_corollary",
    "verify_long_identity",
]
