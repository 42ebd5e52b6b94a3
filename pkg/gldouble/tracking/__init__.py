"""Check timing and structured logging."""
from gldouble.tracking.timing import CheckTimer

__all__ = ["CheckTimer"]
