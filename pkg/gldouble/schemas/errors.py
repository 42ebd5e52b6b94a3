"""Error documents written to stderr when a command cannot produce a report."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ValidationError


class ErrorResponse(BaseModel):
    """Failure document: what went wrong and the exit code it maps to."""

    detail: str
    exit_code: int
    code: Optional[str] = None
    command: Optional[List[str]] = None
    errors: Optional[List[Dict[str, Any]]] = None  # one entry per rejected setting


def settings_errors(exc: ValidationError) -> List[Dict[str, Any]]:
    """Flatten a settings ValidationError into field/message pairs."""
    return [
        {"field": ".".join(str(p) for p in err["loc"]) or "settings", "message": err["msg"]}
        for err in exc.errors()
    ]


def create_error_response(
    detail: str,
    exit_code: int,
    code: Optional[str] = None,
    errors: Optional[List[Dict[str, Any]]] = None,
    command: Optional[List[str]] = None,
) -> Dict[str, Any]:
    """Build the error document, leaving out unset fields."""
    return ErrorResponse(
        detail=detail,
        exit_code=exit_code,
        code=code,
        command=command,
        errors=errors or None,
    ).model_dump(exclude_none=True)
