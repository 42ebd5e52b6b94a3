"""Structured timing and logging around campaign checks."""
import logging
import time
from typing import Any, Dict, Optional

from gldouble.schemas.reports import Timing

logger = logging.getLogger(__name__)


class CheckTimer:
    """Context manager that logs a check's start, completion or failure with its duration."""

    def __init__(self, name: str, **context: Any):
        self.name = name
        self.context: Dict[str, Any] = context
        self.timing = Timing()
        self._start: Optional[float] = None

    def __enter__(self) -> "CheckTimer":
        self._start = time.time()
        logger.info(
            "Check started",
            extra={"check": self.name, **self.context},
        )
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        duration_ms = int((time.time() - (self._start or time.time())) * 1000)
        self.timing = Timing(duration_ms=duration_ms)

        if exc is None:
            logger.info(
                "Check completed",
                extra={"check": self.name, "duration_ms": duration_ms, **self.context},
            )
        else:
            logger.error(
                "Check failed",
                extra={
                    "check": self.name,
                    "duration_ms": duration_ms,
                    "error": str(exc),
                    **self.context,
                },
                exc_info=(exc_type, exc, tb),
            )
        return False
