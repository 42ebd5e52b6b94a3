"""The function family F_n, its dual counterpart and sample points."""
from gldouble.family.functions import (
    Entry,
    Evaluator,
    FamilyFunction,
    LinearCombination,
    Product,
    casimir,
    casimir_values,
    corrupted_family,
    det_u,
    enumerate_dual_family,
    enumerate_family,
    evaluate,
    f,
    family_by_label,
    g,
    h,
    phi,
    phi_matrix,
    psi,
)
from gldouble.family.points import (
    DoublePoint,
    DualPoint,
    random_invertible,
    sample_diagonal_point,
    sample_double_point,
    sample_dual_point,
    sample_points,
)
from gldouble.family.signs import casimir_sign, pencil_exchange_sign, sign_skl

__all__ = [
    "DoublePoint",
    "DualPoint",
    "Entry",
    "Evaluator",
    "FamilyFunction",
    "LinearCombination",
    "Product",
    "casimir",
    "casimir_sign",
    "casimir_values",
    "corrupted_family",
    "det_u",
    "enumerate_dual_family",
    "enumerate_family",
    "evaluate",
    "f",
    "family_by_label",
    "g",
    "h",
    "pencil_exchange_sign",
    "phi",
    "phi_matrix",
    "psi",
    "random_invertible",
    "sample_diagonal_point",
    "sample_double_point",
    "sample_dual_point",
    "sample_points",
    "sign_skl",
]
