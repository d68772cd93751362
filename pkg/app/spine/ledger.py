"""Vertex-count ledger of the pillowcase spine of a two-bridge link complement.

The spine is glued from one pillowcase A_i per twist region and collapsed
from the boundary; every true vertex of the collapsed spine lies on the
boundary of some middle disk D_i. The ledger tracks, per pillowcase, the
labeled true vertices on that boundary circle and an append-only event log.

Starting counts after the first collapse:

    x_1 = a_1 - 1,  x_i = a_i + 2 (1 < i < n),  x_n = a_n - 1

Each index i with a_i = 1 then admits a replacement move, applied in
increasing order of i, with deltas x_{i-1} += 1, x_i -= 1, x_{i+1} -= 1.
Labels start with prefix "y" and switch to "z" once a replacement touches
the pillowcase.
"""

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

from app.common.errors import (
    ReplacementError,
    require_canonical,
    require_two_entries,
)
from app.common.logger import get_logger
from app.links.continued_fraction import ContinuedFraction

logger = get_logger(__name__)


class EventKind(str, Enum):
    """Kinds of ledger events."""

    GLUE = "glue"
    COLLAPSE = "collapse"
    INITIAL_COUNT = "initial_count"
    REPLACEMENT = "replacement"


class ReplacementCase(str, Enum):
    """Which picture of the replacement applies, decided by a_{i-1}."""

    CASE_I = "i"  # a_{i-1} > 1
    CASE_II = "ii"  # a_{i-1} = 1


@dataclass(frozen=True, order=True)
class TrueVertex:
    """A labeled true vertex on the boundary of the middle disk D_i."""

    pillowcase: int
    index: int
    prefix: str = "y"

    def __str__(self) -> str:
        return f"{self.prefix}_{self.index}^({self.pillowcase})"


@dataclass(frozen=True)
class PillowcaseRecord:
    """One pillowcase A_i with its current true vertices."""

    index: int
    twist: int
    vertices: tuple[TrueVertex, ...]

    @property
    def count(self) -> int:
        """Current x_i."""
        return len(self.vertices)

    @property
    def labels(self) -> list[str]:
        return [str(v) for v in self.vertices]

    def relabeled(self) -> "PillowcaseRecord":
        """Same vertices with the post-replacement prefix."""
        return replace(
            self,
            vertices=tuple(replace(v, prefix="z") for v in self.vertices),
        )


@dataclass(frozen=True)
class LedgerEvent:
    """A single ledger event; counts and total are taken after the event."""

    seq: int
    kind: EventKind
    counts: tuple[int, ...]
    pillowcase: int | None = None
    case: ReplacementCase | None = None
    boundary: str | None = None
    labels: tuple[str, ...] = ()
    note: str = ""

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "seq": self.seq,
            "kind": self.kind.value,
            "pillowcase": self.pillowcase,
            "case": self.case.value if self.case else None,
            "boundary": self.boundary,
            "labels": list(self.labels),
            "counts": list(self.counts),
            "total": self.total,
        }

    def to_json(self) -> str:
        """Convert to a single JSON line."""
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def describe(self) -> str:
        """One human-readable trace line."""
        where = f"A_{self.pillowcase}" if self.pillowcase is not None else "all"
        head = f"{self.seq:>3}  {self.kind.value:<13} {where:<5}"
        parts = [head]
        if self.case is not None:
            parts.append(f"case ({self.case.value})")
        if self.note:
            parts.append(self.note)
        if self.boundary:
            parts.append(f"via {self.boundary}")
        if self.labels:
            parts.append("{" + ", ".join(self.labels) + "}")
        counts = ",".join(str(c) for c in self.counts)
        parts.append(f"counts=[{counts}] total={self.total}")
        return "  ".join(parts)


@dataclass(frozen=True)
class SpineLedger:
    """Per-pillowcase true-vertex counts with an event log.

    Values are never mutated; apply_replacement returns a new ledger so
    traces can be branched.
    """

    cf: ContinuedFraction
    pillowcases: tuple[PillowcaseRecord, ...]
    replacements_done: tuple[int, ...] = ()
    events: tuple[LedgerEvent, ...] = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return len(self.pillowcases)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(record.count for record in self.pillowcases)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def record(self, i: int) -> PillowcaseRecord:
        """Pillowcase A_i (1-based)."""
        return self.pillowcases[i - 1]

    def pending(self) -> list[int]:
        """Indices with a_i = 1 not yet replaced."""
        return [
            i
            for i, a in enumerate(self.cf.entries, start=1)
            if a == 1 and i not in self.replacements_done
        ]


class _EventLog:
    """Accumulates events while a ledger is being built."""

    def __init__(self, start: tuple[LedgerEvent, ...] = ()):
        self.events: list[LedgerEvent] = list(start)

    def add(self, kind: EventKind, records: list[PillowcaseRecord], **fields: Any) -> None:
        self.events.append(
            LedgerEvent(
                seq=len(self.events) + 1,
                kind=kind,
                counts=tuple(r.count for r in records),
                **fields,
            )
        )


def _vertices(i: int, first: int, last: int) -> tuple[TrueVertex, ...]:
    return tuple(TrueVertex(pillowcase=i, index=k) for k in range(first, last + 1))


def _without(record: PillowcaseRecord, removed: set[TrueVertex]) -> PillowcaseRecord:
    return replace(record, vertices=tuple(v for v in record.vertices if v not in removed))


def initial_ledger(cf: ContinuedFraction) -> SpineLedger:
    """Build the ledger of the collapsed pillowcase spine before any replacement.

    Args:
        cf: Canonical continued fraction with n >= 2.

    Returns:
        Ledger with x_1 = a_1 - 1, x_i = a_i + 2, x_n = a_n - 1.

    Raises:
        TooShortError: If n < 2.
        NonCanonicalError: If a_1 = 1 or a_n = 1.
    """
    require_two_entries(cf.n)
    require_canonical(cf.entries)
    n = cf.n

    # Before collapsing: y_1..y_{a+1} on the end pillowcases, y_1..y_{a+2} inside.
    records: list[PillowcaseRecord] = []
    for i, a in enumerate(cf.entries, start=1):
        last = a + 1 if i in (1, n) else a + 2
        records.append(PillowcaseRecord(index=i, twist=a, vertices=_vertices(i, 1, last)))

    log = _EventLog()
    for i in range(1, n - 1):
        log.add(
            EventKind.GLUE,
            records,
            pillowcase=i,
            note=f"two tubes and region disks join A_{i} and A_{i + 1}",
        )
    log.add(
        EventKind.GLUE,
        records,
        pillowcase=n - 1,
        note=f"three tubes and two disks join A_{n - 1} and A_{n}",
    )

    first_removed = set(records[0].vertices[:2])
    records[0] = _without(records[0], first_removed)
    log.add(
        EventKind.COLLAPSE,
        records,
        pillowcase=1,
        boundary="∂A_1^NW",
        labels=tuple(str(v) for v in sorted(first_removed)),
        note="collapse removes two vertices",
    )

    a_n = cf.entries[-1]
    last_removed = {TrueVertex(pillowcase=n, index=a_n - 1), TrueVertex(pillowcase=n, index=a_n)}
    records[-1] = _without(records[-1], last_removed)
    log.add(
        EventKind.COLLAPSE,
        records,
        pillowcase=n,
        boundary=f"∂A_{n}^SW",
        labels=tuple(str(v) for v in sorted(last_removed)),
        note="collapse removes two vertices",
    )

    log.add(EventKind.INITIAL_COUNT, records, note="initial counts")

    ledger = SpineLedger(cf=cf, pillowcases=tuple(records), events=tuple(log.events))
    logger.debug(f"initial_ledger({cf}) counts={list(ledger.counts)} total={ledger.total}")
    return ledger


def apply_replacement(ledger: SpineLedger, i: int) -> SpineLedger:
    """Apply the replacement move at pillowcase A_i.

    Args:
        ledger: Current ledger.
        i: Index with a_i = 1, 2 <= i <= n - 1, larger than every index
            already replaced.

    Returns:
        New ledger with x_{i-1} + 1, x_i - 1, x_{i+1} - 1.

    Raises:
        ReplacementError: On a boundary index, a_i != 1, a repeated or
            out-of-order index, or a count that would become negative.
    """
    cf, n = ledger.cf, ledger.n
    if not 2 <= i <= n - 1:
        raise ReplacementError(f"replacement index {i} must satisfy 2 <= i <= {n - 1}")
    if cf[i] != 1:
        raise ReplacementError(f"replacement needs a_{i} = 1, got a_{i} = {cf[i]}")
    if i in ledger.replacements_done:
        raise ReplacementError(f"replacement at {i} already applied")
    if ledger.replacements_done and max(ledger.replacements_done) > i:
        raise ReplacementError(
            f"replacement at {i} is out of order after {list(ledger.replacements_done)}"
        )

    case = ReplacementCase.CASE_I if cf[i - 1] > 1 else ReplacementCase.CASE_II
    records = list(ledger.pillowcases)

    left = records[i - 2].relabeled()
    next_index = max((v.index for v in left.vertices), default=0) + 1
    added = TrueVertex(pillowcase=i - 1, index=next_index, prefix="z")
    records[i - 2] = replace(left, vertices=left.vertices + (added,))

    middle = records[i - 1].relabeled()
    right = records[i].relabeled()
    for record in (middle, right):
        if record.count == 0:
            raise ReplacementError(f"replacement at {i} would empty A_{record.index} below zero")
    middle_removed = middle.vertices[0]
    right_removed = right.vertices[-1]
    records[i - 1] = _without(middle, {middle_removed})
    records[i] = _without(right, {right_removed})

    if case is ReplacementCase.CASE_I:
        boundary = f"∂A_{i}^SE, ∂A_{i - 1}^SW"
    else:
        boundary = f"∂A_{i - 2}^NE, ∂A_{i}^SE, ∂A_{i - 1}^SW"

    log = _EventLog(ledger.events)
    log.add(
        EventKind.REPLACEMENT,
        records,
        pillowcase=i,
        case=case,
        boundary=boundary,
        labels=(f"+{added}", f"-{middle_removed}", f"-{right_removed}"),
        note=f"x_{i - 1}+1 x_{i}-1 x_{i + 1}-1",
    )

    updated = SpineLedger(
        cf=cf,
        pillowcases=tuple(records),
        replacements_done=ledger.replacements_done + (i,),
        events=tuple(log.events),
    )
    logger.debug(
        f"replacement at {i} case ({case.value}): {list(ledger.counts)} -> {list(updated.counts)}"
    )
    return updated


def run_all_replacements(ledger: SpineLedger) -> SpineLedger:
    """Apply the replacement at every a_i = 1 in increasing order.

    Raises:
        ReplacementError: If the ledger already has replacements applied.
    """
    if ledger.replacements_done:
        raise ReplacementError("run_all_replacements expects a fresh ledger")
    for i in ledger.pending():
        ledger = apply_replacement(ledger, i)
    return ledger


def total_true_vertices(ledger: SpineLedger) -> int:
    """Sum of the pillowcase counts."""
    return ledger.total


def simulate(cf: ContinuedFraction) -> SpineLedger:
    """initial_ledger followed by run_all_replacements."""
    return run_all_replacements(initial_ledger(cf))


def trace_lines(ledger: SpineLedger) -> list[str]:
    """Human-readable trace, ending with the final total."""
    entries = ",".join(str(a) for a in ledger.cf.entries)
    lines = [f"spine ledger for C({entries})"]
    lines.extend(event.describe() for event in ledger.events)
    lines.append(f"total = {ledger.total}")
    return lines
