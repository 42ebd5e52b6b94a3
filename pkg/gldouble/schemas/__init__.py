"""Report and error document schemas."""
from gldouble.schemas.errors import ErrorResponse, create_error_response
from gldouble.schemas.reports import CheckRecord, Report, Timing, rational, rational_matrix

__all__ = [
    "CheckRecord",
    "ErrorResponse",
    "Report",
    "Timing",
    "create_error_response",
    "rational",
    "rational_matrix",
]
