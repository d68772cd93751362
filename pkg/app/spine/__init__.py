"""Spine vertex-count ledger."""

from app.spine.ledger import (
    EventKind,
    LedgerEvent,
    PillowcaseRecord,
    ReplacementCase,
    SpineLedger,
    TrueVertex,
    apply_replacement,
    initial_ledger,
    run_all_replacements,
    simulate,
    total_true_vertices,
    trace_lines,
)

__all__ = [
    "EventKind",
    "LedgerEvent",
    "PillowcaseRecord",
    "ReplacementCase",
    "SpineLedger",
    "TrueVertex",
    "apply_replacement",
    "initial_ledger",
    "run_all_replacements",
    "simulate",
    "total_true_vertices",
    "trace_lines",
]
