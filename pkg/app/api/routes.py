"""Read-only API routes mirroring the CLI subcommands."""

from fastapi import APIRouter, HTTPException, Query

from app.api.schemas import (
    CensusResponse,
    ExpandResponse,
    FamilyResponse,
    LedgerEventResponse,
    RunCensusResponse,
    RunListItem,
    RunListResponse,
    SpineResponse,
    TraceResponse,
)
from app.bounds.complexity import BoundReport, complexity_interval
from app.bounds.covers import CoverBound, cover_bound
from app.bounds.families import PretzelSpine, cor2_family, pretzel_spine
from app.census.report import census_report
from app.common.errors import NonCanonicalError, PretzelError
from app.common.logger import get_logger
from app.links.continued_fraction import ContinuedFraction, cf_value
from app.links.two_bridge import equivalence_class, is_hyperbolic, normalize
from app.observability.run_manager import get_run_manager
from app.observability.tracer import get_tracer
from app.spine.ledger import initial_ledger, run_all_replacements

logger = get_logger(__name__)

router = APIRouter()

# Census requests are served synchronously; keep them small.
MAX_CENSUS_P = 500


@router.get("/expand/{p}/{q}", response_model=ExpandResponse)
def expand(p: int, q: int) -> ExpandResponse:
    """Normalize K(p, q) and expand p/q."""
    link = normalize(p, q)
    return ExpandResponse(
        p=link.p,
        q=link.q,
        cf=link.cf.to_list(),
        n=link.n,
        trace=[step.value for step in link.trace],
        hyperbolic=is_hyperbolic(link),
        class_members=sorted(equivalence_class(link)),
    )


@router.get("/bound/{p}/{q}", response_model=BoundReport)
def bound_for_pair(p: int, q: int) -> BoundReport:
    """All bounds for K(p, q)."""
    return complexity_interval(normalize(p, q))


@router.get("/bound", response_model=BoundReport)
def bound_for_cf(cf: str = Query(..., description="a1,a2,...,an")) -> BoundReport:
    """All bounds for the link with the given canonical continued fraction."""
    fraction = ContinuedFraction.parse(cf)
    link = normalize(*cf_value(fraction))
    if link.cf != fraction:
        raise NonCanonicalError(f"{fraction} is not canonical; its canonical form is {link.cf}")
    return complexity_interval(link)


@router.get("/spine", response_model=SpineResponse)
def spine(cf: str = Query(..., description="a1,a2,...,an")) -> SpineResponse:
    """Ledger trace of the spine construction."""
    start = initial_ledger(ContinuedFraction.parse(cf))
    final = run_all_replacements(start)
    return SpineResponse(
        cf=final.cf.to_list(),
        initial_counts=list(start.counts),
        final_counts=list(final.counts),
        replacements=list(final.replacements_done),
        total=final.total,
        events=[LedgerEventResponse(**event.to_dict()) for event in final.events],
    )


@router.get("/cover/{p}/{q}/{d}", response_model=CoverBound)
def cover(p: int, q: int, d: int) -> CoverBound:
    """Bound for the d-fold meridian-cyclic branched cover."""
    return cover_bound(normalize(p, q), d)


@router.get("/family/{n}", response_model=FamilyResponse)
def family(n: int) -> FamilyResponse:
    """Member n of the [2,1,...,1,2] family."""
    link, exact = cor2_family(n)
    return FamilyResponse(n=n, p=link.p, q=link.q, cf=link.cf.to_list(), complexity=exact)


@router.get("/pretzel", response_model=PretzelSpine)
def pretzel(a: str = Query(..., description="a1,a2,...,an, signs allowed")) -> PretzelSpine:
    """Upper bound for the pretzel link P(a1, ..., an)."""
    try:
        twists = [int(part) for part in a.split(",") if part.strip()]
    except ValueError as e:
        raise PretzelError(f"malformed pretzel parameters {a!r}: {e}") from e
    return pretzel_spine(twists)


@router.get("/census", response_model=CensusResponse)
def census(max_p: int = Query(..., ge=2, le=MAX_CENSUS_P)) -> CensusResponse:
    """Census rows for every class with p <= max_p."""
    rows = census_report(max_p)
    logger.info(f"Served census max_p={max_p} ({len(rows)} rows)")
    return CensusResponse(
        max_p=max_p,
        classes=len(rows),
        exact=sum(1 for row in rows if row.exact is not None),
        rows=rows,
    )


@router.get("/runs", response_model=RunListResponse)
def list_runs() -> RunListResponse:
    """List saved runs."""
    runs = get_run_manager().list_runs()
    return RunListResponse(runs=[RunListItem(**r) for r in runs], total=len(runs))


@router.get("/runs/{run_id}", response_model=RunCensusResponse)
def get_run(run_id: str) -> RunCensusResponse:
    """Summary and rows of a saved census."""
    run_manager = get_run_manager()
    summary = run_manager.load_summary(run_id)
    if summary is None:
        raise HTTPException(status_code=404, detail=f"Run {run_id} has no saved census")
    return RunCensusResponse(run_id=run_id, summary=summary, rows=run_manager.load_rows(run_id))


@router.get("/trace/{run_id}", response_model=TraceResponse)
def get_trace(run_id: str) -> TraceResponse:
    """Ledger trace saved by `spine --save`."""
    entries = get_tracer().get_trace(run_id)
    if not entries:
        raise HTTPException(status_code=404, detail=f"Run {run_id} has no saved trace")
    return TraceResponse(
        run_id=run_id,
        entries=[LedgerEventResponse(**entry) for entry in entries],
    )
