"""Run manager for persisted census outputs."""

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from app.census.report import CensusRow, rows_to_csv, rows_to_json, summarize
from app.common.config import get_settings
from app.common.logger import get_logger

logger = get_logger(__name__)


class RunManager:
    """Manager for organizing and persisting run outputs.

    Each run is stored in runs/<run_id>/ with the following files:
    - census.json: Census rows
    - census.csv: Census table
    - summary.json: Parameters and counts
    - trace.jsonl: Spine ledger trace (written by the tracer)
    """

    FILES = {
        "census_json": "census.json",
        "census_csv": "census.csv",
        "summary": "summary.json",
        "trace": "trace.jsonl",
    }

    def __init__(self, runs_dir: Path | None = None):
        """Initialize run manager.

        Args:
            runs_dir: Directory for run outputs.
        """
        settings = get_settings()
        self.runs_dir = runs_dir or settings.runs_path
        logger.debug(f"Initialized RunManager with runs_dir={self.runs_dir}")

    def get_run_dir(self, run_id: str) -> Path:
        """Get the directory for a specific run, creating it."""
        run_dir = self.runs_dir / run_id
        run_dir.mkdir(parents=True, exist_ok=True)
        return run_dir

    def save_census(
        self,
        run_id: str,
        rows: list[CensusRow],
        params: dict[str, Any] | None = None,
    ) -> Path:
        """Save census rows as JSON and CSV plus a summary.

        Args:
            run_id: Run ID.
            rows: Census rows.
            params: Parameters the census ran with.

        Returns:
            Path to the run directory.
        """
        run_dir = self.get_run_dir(run_id)

        (run_dir / self.FILES["census_json"]).write_text(rows_to_json(rows), encoding="utf-8")
        (run_dir / self.FILES["census_csv"]).write_text(rows_to_csv(rows), encoding="utf-8")

        summary = {
            "run_id": run_id,
            "created_at": datetime.now(timezone.utc).isoformat(),
            "params": params or {},
            **summarize(rows),
        }
        with open(run_dir / self.FILES["summary"], "w", encoding="utf-8") as f:
            json.dump(summary, f, ensure_ascii=False, indent=2)

        logger.info(f"Saved census of {len(rows)} classes to {run_dir}")
        return run_dir

    def load_summary(self, run_id: str) -> dict[str, Any] | None:
        """Load the summary for a run, or None if missing."""
        summary_path = self.runs_dir / run_id / self.FILES["summary"]
        if not summary_path.exists():
            return None
        with open(summary_path, "r", encoding="utf-8") as f:
            return json.load(f)

    def load_rows(self, run_id: str) -> list[dict[str, Any]]:
        """Load saved census rows as dictionaries."""
        path = self.runs_dir / run_id / self.FILES["census_json"]
        if not path.exists():
            return []
        return json.loads(path.read_text(encoding="utf-8"))

    def list_runs(self) -> list[dict[str, Any]]:
        """List all runs, newest first."""
        if not self.runs_dir.exists():
            return []

        runs = []
        for run_dir in self.runs_dir.iterdir():
            if run_dir.is_dir() and not run_dir.name.startswith("."):
                summary = self.load_summary(run_dir.name) or {}
                runs.append({
                    "run_id": run_dir.name,
                    "created_at": summary.get("created_at"),
                    "classes": summary.get("classes"),
                    "has_trace": (run_dir / self.FILES["trace"]).exists(),
                })

        runs.sort(key=lambda x: x.get("created_at") or "", reverse=True)
        return runs


# Singleton instance
_run_manager: RunManager | None = None


def get_run_manager() -> RunManager:
    """Get or create the run manager instance."""
    global _run_manager
    if _run_manager is None:
        _run_manager = RunManager()
    return _run_manager


def reset_run_manager() -> None:
    """Reset the run manager singleton."""
    global _run_manager
    _run_manager = None
