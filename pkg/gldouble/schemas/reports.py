"""Report schemas: every exact value is serialized as a "p/q" string."""
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from gldouble.config import settings

Status = Literal["pass", "fail", "evidence", "skipped"]


def rational(value: Fraction | int) -> str:
    """Exact rational as "p/q", never a float."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def rational_matrix(rows) -> List[List[Optional[str]]]:
    return [[None if x is None else rational(x) for x in row] for row in rows]


class Timing(BaseModel):
    """Wall-clock timing; excluded when comparing reports."""

    duration_ms: int = 0


class CheckRecord(BaseModel):
    """Outcome of one named check."""

    name: str
    status: Status
    detail: Optional[str] = None
    values: Dict[str, Any] = Field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    timing: Timing = Field(default_factory=Timing)

    @property
    def failed(self) -> bool:
        return self.status == "fail"


class Report(BaseModel):
    """A campaign report."""

    schema_: int = Field(default_factory=lambda: settings.schema_version, alias="schema")
    command: List[str]
    n: Optional[int] = None
    seed: Optional[int] = None
    checks: List[CheckRecord] = Field(default_factory=list)
    results: Dict[str, Any] = Field(default_factory=dict)
    timing: Timing = Field(default_factory=Timing)

    model_config = {"populate_by_name": True}

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.checks)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        return record

    def to_json(self, with_timing: bool = True) -> str:
        exclude: Dict[str, Any] = {}
        if not with_timing:
            exclude = {"timing": True, "checks": {"__all__": {"timing"}}}
        return self.model_dump_json(by_alias=True, indent=2, exclude=exclude)
