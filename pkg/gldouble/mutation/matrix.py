"""Matrix and coefficient mutation."""
from __future__ import annotations

from gldouble.errors import MutationError
from gldouble.seeds.exchange_matrix import ExtendedExchangeMatrix
from gldouble.seeds.strings import CoefficientString


def mutate_matrix(B: ExtendedExchangeMatrix, k: str) -> ExtendedExchangeMatrix:
    """B~ mutated in direction k.

    Raises:
        MutationError: k is not a mutable vertex
    """
    if k not in B.rows:
        raise MutationError(f"cannot mutate at {k}: not a mutable vertex")
    kk = B.rows.index(k)
    rows, cols = B.shape
    b = B.entries
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            if i == kk or j == kk:
                row.append(-b[i][j])
            else:
                b_ik, b_kj = b[i][kk], b[kk][j]
                row.append(b[i][j] + (abs(b_ik) * b_kj + b_ik * abs(b_kj)) // 2)
        out.append(row)
    return B.with_entries(out)


def mutate_coefficients(strings: dict[str, CoefficientString], k: str) -> dict[str, CoefficientString]:
    """Reverse the string at k; every other string is unchanged."""
    if k not in strings:
        raise MutationError(f"cannot mutate at {k}: no coefficient string")
    out = dict(strings)
    out[k] = strings[k].reversed()
    return out
