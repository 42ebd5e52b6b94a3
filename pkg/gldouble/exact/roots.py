"""Exact d-th roots of rationals."""
from fractions import Fraction

from sympy import integer_nthroot


def exact_root(value: Fraction, d: int) -> Fraction | None:
    """The rational r with r**d == value, or None when no such rational exists.

    For even d the non-negative root is returned.
    """
    if d < 1:
        raise ValueError(f"root order must be positive, got {d}")
    if value < 0:
        if d % 2 == 0:
            return None
        root = exact_root(-value, d)
        return None if root is None else -root
    num, num_exact = integer_nthroot(value.numerator, d)
    den, den_exact = integer_nthroot(value.denominator, d)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num), int(den))
