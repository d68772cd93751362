"""Census tables of two-bridge link complements with their bounds."""

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any

from pydantic import BaseModel, ConfigDict

from app.bounds.complexity import BoundReport, report_for
from app.census.enumerate import enumerate_links
from app.census.volumes import VolumeTable, lower_from_volume
from app.common.config import get_settings
from app.common.logger import get_logger
from app.links.two_bridge import TwoBridgeLink, equivalence_class

logger = get_logger(__name__)

CSV_HEADER = [
    "p",
    "q",
    "cf",
    "n",
    "upper_thm1",
    "upper_lemma1",
    "upper_sw",
    "lower",
    "effective_lower",
    "exact",
    "hyperbolic",
]


class CensusRow(BaseModel):
    """One equivalence class of links with its bounds.

    effective_lower is the larger of the volume-estimate bound and the bound
    derived from an externally supplied volume; the external one may be weaker.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    class_members: list[int]
    report: BoundReport
    volume: float | None = None
    lower_from_volume: int | None = None
    effective_lower: int
    exact: int | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return self.model_dump(mode="json")

    def to_csv_row(self) -> list[str]:
        report = self.report

        def cell(value: int | None) -> str:
            return "" if value is None else str(value)

        return [
            str(self.p),
            str(self.q),
            "[" + ",".join(str(a) for a in report.cf) + "]",
            str(report.n),
            cell(report.upper_thm1),
            cell(report.upper_lemma1),
            cell(report.upper_sw),
            str(report.lower),
            str(self.effective_lower),
            cell(self.exact),
            "true" if report.hyperbolic else "false",
        ]


def build_row(link: TwoBridgeLink, volumes: VolumeTable | None = None) -> CensusRow:
    """Compute the census row for one canonical link."""
    report = report_for(link)

    volume: float | None = None
    from_volume: int | None = None
    entry = volumes.get(link.p, link.q) if volumes is not None else None
    if entry is not None and entry.hyperbolic:
        volume = entry.volume
        from_volume = lower_from_volume(entry.volume)

    effective = max(report.lower, from_volume or 0)
    upper = report.upper_thm1
    if upper is not None and effective > upper:
        logger.warning(f"{link}: lower bound {effective} exceeds upper bound {upper}")
    exact = upper if upper is not None and effective == upper else None

    return CensusRow(
        p=link.p,
        q=link.q,
        class_members=sorted(equivalence_class(link)),
        report=report,
        volume=volume,
        lower_from_volume=from_volume,
        effective_lower=effective,
        exact=exact,
    )


def census_report(
    max_p: int,
    volumes: VolumeTable | None = None,
    parallel: bool | None = None,
    workers: int | None = None,
) -> list[CensusRow]:
    """Rows for every equivalence class with p <= max_p, ordered by (p, q*).

    Args:
        max_p: Largest p to include, at least 2.
        volumes: Optional external volume table.
        parallel: Compute rows in worker processes; defaults to settings.
        workers: Pool size; defaults to settings.

    Raises:
        ModulusError: If max_p < 2.
    """
    settings = get_settings()
    parallel = settings.census_parallel if parallel is None else parallel
    workers = workers or settings.census_workers

    links = enumerate_links(max_p)
    build = partial(build_row, volumes=volumes)

    if parallel and workers > 1:
        chunksize = max(1, len(links) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(build, links, chunksize=chunksize))
    else:
        rows = [build(link) for link in links]
    rows.sort(key=lambda row: (row.p, row.q))

    if volumes is not None:
        unmatched = [entry.key for entry in volumes if entry.p > max_p]
        if unmatched:
            logger.info(f"{len(unmatched)} volume rows lie beyond max_p={max_p}")

    logger.info(
        f"Census max_p={max_p}: {len(rows)} classes, "
        f"{sum(1 for row in rows if row.exact is not None)} exact "
        f"({'parallel' if parallel and workers > 1 else 'serial'})"
    )
    return rows


def summarize(rows: list[CensusRow]) -> dict[str, Any]:
    """Counts over a census."""
    hyperbolic = [row for row in rows if row.report.hyperbolic]
    return {
        "classes": len(rows),
        "max_p": max((row.p for row in rows), default=0),
        "hyperbolic": len(hyperbolic),
        "torus": len(rows) - len(hyperbolic),
        "exact": sum(1 for row in rows if row.exact is not None),
        "sharpened_by_volume": sum(
            1
            for row in rows
            if row.lower_from_volume is not None and row.lower_from_volume > row.report.lower
        ),
    }


def rows_to_json(rows: list[CensusRow]) -> str:
    """JSON array of row objects."""
    return json.dumps([row.to_dict() for row in rows], indent=2, ensure_ascii=False)


def rows_to_csv(rows: list[CensusRow]) -> str:
    """CSV with the fixed census header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.to_csv_row())
    return buffer.getvalue()
