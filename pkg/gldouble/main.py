"""Command-line entry point for the gldouble verification engine."""
import json
import logging
import sys
from typing import List, Optional

from gldouble.config import settings
from gldouble.errors import GLDoubleError, ResampleExhausted, UsageError
from gldouble.harness.cli import build_parser, execute, exit_code, failed_checks, resolve_options
from gldouble.schemas.errors import create_error_response

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_RESAMPLE = 3


def configure_logging() -> None:
    """Configure structured logging once, at the resolved level."""
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _fail(detail: str, status: int, code: str, errors: Optional[List[dict]] = None) -> int:
    document = create_error_response(detail=detail, exit_code=status, code=code, errors=errors)
    sys.stderr.write(json.dumps(document) + "\n")
    return status


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command and map the outcome to an exit code."""
    try:
        args = resolve_options(build_parser().parse_args(argv))
    except UsageError as e:
        return _fail(str(e), EXIT_USAGE, "usage_error", e.errors)

    configure_logging()
    try:
        report = execute(args)
    except UsageError as e:
        return _fail(str(e), EXIT_USAGE, "usage_error")
    except ResampleExhausted as e:
        logger.error("Sampling failed", extra={"error": str(e)})
        return _fail(str(e), EXIT_RESAMPLE, "resample_exhausted")
    except GLDoubleError as e:
        logger.error("Structural failure", extra={"error": str(e)}, exc_info=True)
        return _fail(str(e), EXIT_VIOLATION, type(e).__name__)
    except Exception as e:
        logger.error("Unexpected error", extra={"error": str(e)}, exc_info=True)
        return _fail("An unexpected error occurred", EXIT_USAGE, "internal_error")

    for record in failed_checks(report):
        logger.warning("Check violated", extra={"check": record.name, "detail": record.detail})
    return exit_code(report)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
