"""Exact rational linear algebra, jets and pencils."""
from gldouble.exact.jet import Jet, JetMat, value_part
from gldouble.exact.matrix import Mat, MatrixLike, Scalar, adjugate, det, inverse, matpow, to_scalar
from gldouble.exact.pencil import interpolate, poly_coeffs_from_pencil
from gldouble.exact.roots import exact_root

__all__ = [
    "Jet",
    "JetMat",
    "Mat",
    "MatrixLike",
    "Scalar",
    "adjugate",
    "det",
    "exact_root",
    "interpolate",
    "inverse",
    "matpow",
    "poly_coeffs_from_pencil",
    "to_scalar",
    "value_part",
]
