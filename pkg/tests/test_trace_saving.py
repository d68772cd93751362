"""Tests for trace saving functionality."""

import json

from app.census.report import census_report
from app.links.continued_fraction import ContinuedFraction
from app.observability.run_manager import RunManager, get_run_manager
from app.observability.tracer import Tracer, get_tracer
from app.spine.ledger import simulate


class TestTracer:
    """Tests for ledger trace logging."""

    def test_trace_saved_to_file(self, test_runs_dir, worked_example):
        """Test that ledger events are saved to a JSONL file."""
        tracer = Tracer(runs_dir=test_runs_dir)
        ledger = simulate(worked_example)

        path = tracer.record("run-1", ledger)

        # Check file exists
        trace_file = test_runs_dir / "run-1" / "trace.jsonl"
        assert path == trace_file
        assert trace_file.exists()

        # Check content
        lines = trace_file.read_text(encoding="utf-8").strip().split("\n")
        assert len(lines) == len(ledger.events)

        first = json.loads(lines[0])
        assert first["kind"] == "glue"

        last = json.loads(lines[-1])
        assert last["kind"] == "replacement"
        assert last["counts"] == [2, 5, 2, 4, 2]

    def test_record_replaces_earlier_trace(self, test_runs_dir, worked_example):
        """Test recording twice keeps only the latest ledger."""
        tracer = Tracer(runs_dir=test_runs_dir)
        tracer.record("run-2", simulate(worked_example))
        tracer.record("run-2", simulate(ContinuedFraction((2, 2))))

        lines = (test_runs_dir / "run-2" / "trace.jsonl").read_text(encoding="utf-8")
        assert json.loads(lines.strip().split("\n")[-1])["total"] == 2

    def test_trace_retrieval(self, test_runs_dir, worked_example):
        """Test retrieving trace entries from the buffer and from disk."""
        tracer = Tracer(runs_dir=test_runs_dir)
        tracer.record("run-3", simulate(worked_example))

        entries = tracer.get_trace("run-3")
        assert len(entries) == 8
        assert entries[-1]["total"] == 15

        # A fresh tracer reads the file
        reloaded = Tracer(runs_dir=test_runs_dir).get_trace("run-3")
        assert reloaded == entries

    def test_disabled_tracer(self, test_runs_dir, worked_example):
        """Test nothing is written when tracing is disabled."""
        tracer = Tracer(runs_dir=test_runs_dir, enabled=False)

        assert tracer.record("run-4", simulate(worked_example)) is None
        assert not (test_runs_dir / "run-4" / "trace.jsonl").exists()
        assert len(tracer.get_trace("run-4")) == 8

    def test_missing_run(self, test_runs_dir):
        """Test an unknown run has an empty trace."""
        assert Tracer(runs_dir=test_runs_dir).get_trace("nope") == []

    def test_singleton_uses_settings(self, test_runs_dir):
        """Test get_tracer picks up the configured runs directory."""
        assert get_tracer().runs_dir == test_runs_dir
        assert get_tracer() is get_tracer()


class TestRunManager:
    """Tests for run management."""

    def test_save_census(self, test_runs_dir):
        """Test saving census outputs."""
        manager = RunManager(runs_dir=test_runs_dir)
        rows = census_report(13)

        run_dir = manager.save_census("census-1", rows, {"max_p": 13})

        assert run_dir == test_runs_dir / "census-1"
        assert (run_dir / "census.json").exists()
        assert (run_dir / "census.csv").exists()

        summary = manager.load_summary("census-1")
        assert summary["classes"] == len(rows)
        assert summary["max_p"] == 13
        assert summary["params"] == {"max_p": 13}
        assert "created_at" in summary

    def test_load_rows(self, test_runs_dir):
        """Test loading saved rows."""
        manager = RunManager(runs_dir=test_runs_dir)
        manager.save_census("census-2", census_report(5))

        rows = manager.load_rows("census-2")
        assert [(row["p"], row["q"]) for row in rows][-1] == (5, 2)
        assert manager.load_rows("missing") == []
        assert manager.load_summary("missing") is None

    def test_list_runs(self, test_runs_dir, worked_example):
        """Test listing runs."""
        manager = RunManager(runs_dir=test_runs_dir)
        manager.save_census("census-3", census_report(5))
        Tracer(runs_dir=test_runs_dir).record("spine-1", simulate(worked_example))

        runs = {run["run_id"]: run for run in manager.list_runs()}
        assert set(runs) == {"census-3", "spine-1"}
        assert runs["census-3"]["classes"] == 5
        assert runs["census-3"]["has_trace"] is False
        assert runs["spine-1"]["has_trace"] is True

    def test_singleton_uses_settings(self, test_runs_dir):
        """Test get_run_manager picks up the configured runs directory."""
        assert get_run_manager().runs_dir == test_runs_dir
