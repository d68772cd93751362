"""Pydantic schemas for API responses."""

from typing import Any

from pydantic import BaseModel

from app.bounds.complexity import BoundReport
from app.census.report import CensusRow


class ExpandResponse(BaseModel):
    """Normalized link with its canonical continued fraction."""

    p: int
    q: int
    cf: list[int]
    n: int
    trace: list[str]
    hyperbolic: bool
    class_members: list[int]


class LedgerEventResponse(BaseModel):
    """A single ledger event."""

    seq: int
    kind: str
    pillowcase: int | None = None
    case: str | None = None
    boundary: str | None = None
    labels: list[str] = []
    counts: list[int]
    total: int


class SpineResponse(BaseModel):
    """Ledger trace of the spine construction."""

    cf: list[int]
    initial_counts: list[int]
    final_counts: list[int]
    replacements: list[int]
    total: int
    events: list[LedgerEventResponse]


class FamilyResponse(BaseModel):
    """Member of the [2,1,...,1,2] family."""

    n: int
    p: int
    q: int
    cf: list[int]
    complexity: int


class CensusResponse(BaseModel):
    """Census rows with summary counts."""

    max_p: int
    classes: int
    exact: int
    rows: list[CensusRow]


class RunListItem(BaseModel):
    """Item in run list."""

    run_id: str
    created_at: str | None = None
    classes: int | None = None
    has_trace: bool = False


class RunListResponse(BaseModel):
    """List of saved runs."""

    runs: list[RunListItem]
    total: int


class RunCensusResponse(BaseModel):
    """Saved census of a run."""

    run_id: str
    summary: dict[str, Any]
    rows: list[dict[str, Any]]


class TraceResponse(BaseModel):
    """Saved ledger trace of a run."""

    run_id: str
    entries: list[LedgerEventResponse]


class HealthResponse(BaseModel):
    """Health check response."""

    status: str
    version: str
    timestamp: str


class ErrorResponse(BaseModel):
    """Error response."""

    error: str
    detail: str | None = None


__all__ = [
    "BoundReport",
    "CensusResponse",
    "ErrorResponse",
    "ExpandResponse",
    "FamilyResponse",
    "HealthResponse",
    "LedgerEventResponse",
    "RunCensusResponse",
    "RunListItem",
    "RunListResponse",
    "SpineResponse",
    "TraceResponse",
]
