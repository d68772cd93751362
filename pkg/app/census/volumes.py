"""Hyperbolic volume tables supplied from outside.

CSV contract: header ``p,q,volume`` then one row per link. q may be any
member of the link's equivalence class; rows are keyed by the canonical
(p, q*). Volumes turn into complexity lower bounds via
ceil(vol / v3 - slack).
"""

import codecs
import csv
import io
from dataclasses import dataclass, field
from math import ceil, isfinite
from pathlib import Path
from typing import Iterator

from app.bounds.complexity import V3
from app.common.config import get_settings
from app.common.errors import ComplexityError, VolumeTableError
from app.common.logger import get_logger
from app.links.two_bridge import canonical_q, is_hyperbolic, normalize

logger = get_logger(__name__)

HEADER = ["p", "q", "volume"]


@dataclass(frozen=True)
class VolumeEntry:
    """One ingested volume row."""

    p: int
    q: int
    volume: float
    line: int
    source_q: int
    hyperbolic: bool

    @property
    def key(self) -> tuple[int, int]:
        return self.p, self.q


@dataclass
class VolumeTable:
    """Volumes keyed by canonical (p, q*)."""

    entries: dict[tuple[int, int], VolumeEntry] = field(default_factory=dict)
    source: str | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def __iter__(self) -> Iterator[VolumeEntry]:
        return iter(self.entries.values())

    def get(self, p: int, q: int) -> VolumeEntry | None:
        return self.entries.get((p, q))

    def flagged(self) -> list[VolumeEntry]:
        """Rows for links with no hyperbolic structure; kept but never used."""
        return [entry for entry in self if not entry.hyperbolic]


def lower_from_volume(volume: float, slack: float | None = None) -> int:
    """Complexity lower bound ceil(vol / v3 - slack).

    The slack keeps an exact integer quotient (the figure-eight knot has
    volume 2 v3) from rounding up past itself.
    """
    if slack is None:
        slack = get_settings().volume_slack
    return ceil(volume / V3 - slack)


def parse_volumes(text: str, source: str | None = None) -> VolumeTable:
    """Parse CSV text into a VolumeTable.

    Raises:
        VolumeTableError: On a bad header, a wrong column count, a
            non-numeric or negative volume, an invalid (p, q), or a
            duplicate link; the error carries the line number.
    """
    table = VolumeTable(source=source)
    text = text.removeprefix("\ufeff")
    if not text.strip():
        return table

    reader = csv.reader(io.StringIO(text))
    header_seen = False
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if not header_seen:
            if [cell.lower() for cell in cells] != HEADER:
                raise VolumeTableError(f"expected header p,q,volume, got {row}", line)
            header_seen = True
            continue
        entry = _parse_row(cells, line)
        previous = table.entries.get(entry.key)
        if previous is not None:
            raise VolumeTableError(
                f"duplicate volume for K{entry.key} (first given on line {previous.line})",
                line,
            )
        table.entries[entry.key] = entry

    flagged = table.flagged()
    if flagged:
        logger.warning(f"{len(flagged)} volume rows name non-hyperbolic links and are ignored")
    return table


def _parse_row(cells: list[str], line: int) -> VolumeEntry:
    if len(cells) != len(HEADER):
        raise VolumeTableError(f"expected 3 columns, got {len(cells)}", line)
    try:
        p, q = int(cells[0]), int(cells[1])
    except ValueError as e:
        raise VolumeTableError(f"p and q must be integers: {e}", line) from e
    try:
        volume = float(cells[2])
    except ValueError as e:
        raise VolumeTableError(f"volume must be numeric, got {cells[2]!r}", line) from e
    if not isfinite(volume) or volume < 0:
        raise VolumeTableError(f"volume must be a non-negative number, got {cells[2]!r}", line)

    try:
        link = normalize(p, q)
    except ComplexityError as e:
        raise VolumeTableError(str(e), line) from e

    return VolumeEntry(
        p=link.p,
        q=canonical_q(link),
        volume=volume,
        line=line,
        source_q=q,
        hyperbolic=is_hyperbolic(link),
    )


def ingest_volumes(path: str | Path) -> VolumeTable:
    """Read a volume CSV file.

    Raises:
        VolumeTableError: On any malformed row, or if the file cannot be read
            or decoded as UTF-8 (a leading byte-order mark is dropped).
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise VolumeTableError(f"cannot read volume table {path}: {e}") from e
    raw = raw.removeprefix(codecs.BOM_UTF8)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise VolumeTableError(f"volume table {path} is not valid UTF-8: {e.reason}", line) from e
    table = parse_volumes(text, source=str(path))
    logger.info(f"Ingested {len(table)} volumes from {path}")
    return table
