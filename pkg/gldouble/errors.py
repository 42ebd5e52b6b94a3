"""Exception hierarchy shared by every gldouble module."""
from fractions import Fraction


class GLDoubleError(Exception):
    """Base class for all engine errors."""


class DimensionError(GLDoubleError, ValueError):
    """Matrix or index dimensions do not fit the operation."""


class SingularMatrixError(GLDoubleError, ZeroDivisionError):
    """An inverse was requested for a matrix with zero determinant."""

    def __init__(self, message: str, det: Fraction | None = None):
        super().__init__(message)
        self.det = det


class ResampleRequired(GLDoubleError):
    """A sample point hit a zero denominator; the caller should draw a new point."""


class ResampleExhausted(GLDoubleError):
    """The resample limit ran out; persistent zeros indicate a bug."""


class StructuralError(GLDoubleError):
    """A quiver or exchange matrix violates a structural invariant."""


class OrientationError(GLDoubleError):
    """A coefficient string does not yield polynomial p-hat values."""


class MutationError(GLDoubleError):
    """Mutation requested at a non-mutable vertex or beyond the depth limit."""


class DegreeBoundError(GLDoubleError):
    """An interpolated restriction exceeded its declared degree bound."""


class UsageError(GLDoubleError):
    """Invalid command-line usage."""

    def __init__(self, message: str, errors: list[dict] | None = None):
        super().__init__(message)
        self.errors = errors
