"""Census of two-bridge link complements."""

from app.census.enumerate import enumerate_links
from app.census.report import (
    CSV_HEADER,
    CensusRow,
    build_row,
    census_report,
    rows_to_csv,
    rows_to_json,
    summarize,
)
from app.census.volumes import (
    VolumeEntry,
    VolumeTable,
    ingest_volumes,
    lower_from_volume,
    parse_volumes,
)

__all__ = [
    "enumerate_links",
    "CSV_HEADER",
    "CensusRow",
    "build_row",
    "census_report",
    "rows_to_csv",
    "rows_to_json",
    "summarize",
    "VolumeEntry",
    "VolumeTable",
    "ingest_volumes",
    "lower_from_volume",
    "parse_volumes",
]
