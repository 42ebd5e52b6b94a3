"""Poisson brackets on D(GL_n), GL_n and GL_n*."""
from gldouble.poisson.base import BaseBracket
from gldouble.poisson.brackets import (
    DIAGONAL_SIGN,
    DiagonalRestriction,
    DoubleBracket,
    DualBracket,
    OfU,
    StandardBracket,
    bracket_double,
    bracket_dual,
    bracket_from_gradients,
    bracket_std,
)
from gldouble.poisson.cache import GradientCache
from gldouble.poisson.gradients import GradientPair, MatrixGradient, directional_derivative, gradients
from gldouble.poisson.lie import LiePair, double_decompose, r_double, r_minus, r_plus, r_std
from gldouble.poisson.logcanonical import (
    CasimirWitness,
    LogCanonicalViolation,
    OmegaMatrix,
    casimir_check,
    log_canonical_check,
)
from gldouble.poisson.router import BracketRouter

__all__ = [
    "DIAGONAL_SIGN",
    "BaseBracket",
    "BracketRouter",
    "CasimirWitness",
    "DiagonalRestriction",
    "DoubleBracket",
    "DualBracket",
    "GradientCache",
    "GradientPair",
    "LiePair",
    "LogCanonicalViolation",
    "MatrixGradient",
    "OfU",
    "OmegaMatrix",
    "StandardBracket",
    "bracket_double",
    "bracket_dual",
    "bracket_from_gradients",
    "bracket_std",
    "casimir_check",
    "directional_derivative",
    "double_decompose",
    "gradients",
    "log_canonical_check",
    "r_double",
    "r_minus",
    "r_plus",
    "r_std",
]
