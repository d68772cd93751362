"""Tracer persisting spine-ledger events as JSON lines."""

import json
from pathlib import Path
from typing import Any

from app.common.config import get_settings
from app.common.logger import get_logger
from app.spine.ledger import SpineLedger

logger = get_logger(__name__)


class Tracer:
    """Writes ledger traces to runs/<run_id>/trace.jsonl."""

    def __init__(self, runs_dir: Path | None = None, enabled: bool | None = None):
        """Initialize tracer.

        Args:
            runs_dir: Directory for run outputs.
            enabled: Override the trace_enabled setting.
        """
        settings = get_settings()
        self.runs_dir = runs_dir or settings.runs_path
        self.enabled = settings.trace_enabled if enabled is None else enabled

        # In-memory copy per run
        self._buffers: dict[str, list[dict[str, Any]]] = {}

        logger.debug(f"Initialized Tracer (enabled={self.enabled}, runs_dir={self.runs_dir})")

    def trace_path(self, run_id: str) -> Path:
        return self.runs_dir / run_id / "trace.jsonl"

    def record(self, run_id: str, ledger: SpineLedger) -> Path | None:
        """Write every event of a ledger, replacing any earlier trace for the run.

        Args:
            run_id: Run ID.
            ledger: Ledger whose events are written.

        Returns:
            Path of the trace file, or None when tracing is disabled.
        """
        entries = [event.to_dict() for event in ledger.events]
        self._buffers[run_id] = entries
        if not self.enabled:
            return None

        trace_file = self.trace_path(run_id)
        trace_file.parent.mkdir(parents=True, exist_ok=True)
        with open(trace_file, "w", encoding="utf-8") as f:
            for entry in entries:
                f.write(json.dumps(entry, ensure_ascii=False) + "\n")

        logger.info(f"Traced {len(entries)} ledger events for C{ledger.cf} to {trace_file}")
        return trace_file

    def get_trace(self, run_id: str) -> list[dict[str, Any]]:
        """Get all trace entries for a run.

        Args:
            run_id: Run ID.

        Returns:
            List of event dictionaries, in order.
        """
        # Check buffer first
        if run_id in self._buffers:
            return list(self._buffers[run_id])

        trace_file = self.trace_path(run_id)
        if not trace_file.exists():
            return []

        with open(trace_file, "r", encoding="utf-8") as f:
            return [json.loads(line) for line in f if line.strip()]


# Singleton instance
_tracer: Tracer | None = None


def get_tracer() -> Tracer:
    """Get or create the tracer instance."""
    global _tracer
    if _tracer is None:
        _tracer = Tracer()
    return _tracer


def reset_tracer() -> None:
    """Reset the tracer singleton."""
    global _tracer
    _tracer = None
