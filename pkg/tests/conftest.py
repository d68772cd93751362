"""Pytest configuration and fixtures."""

import os
import sys
from pathlib import Path

import pytest

# Add app to path
sys.path.insert(0, str(Path(__file__).parent.parent))

# Set test environment
os.environ["TWOBRIDGE_LOG_LEVEL"] = "WARNING"
os.environ["TWOBRIDGE_TRACE_ENABLED"] = "true"
os.environ["TWOBRIDGE_RUNS_DIR"] = "test_runs"


@pytest.fixture(autouse=True)
def reset_singletons():
    """Reset all singleton instances before each test."""
    from app.common.config import get_settings
    from app.observability.tracer import reset_tracer
    from app.observability.run_manager import reset_run_manager

    # Reset before test
    get_settings.cache_clear()
    reset_tracer()
    reset_run_manager()

    yield

    # Reset after test
    get_settings.cache_clear()
    reset_tracer()
    reset_run_manager()


@pytest.fixture
def test_runs_dir(tmp_path, monkeypatch):
    """Create temporary runs directory."""
    from app.common.config import get_settings

    runs_dir = tmp_path / "test_runs"
    runs_dir.mkdir()
    monkeypatch.setenv("TWOBRIDGE_RUNS_DIR", str(runs_dir))
    get_settings.cache_clear()
    return runs_dir


@pytest.fixture
def volume_csv(tmp_path):
    """Volume table with the figure-eight knot and the Whitehead link."""
    path = tmp_path / "volumes.csv"
    path.write_text("p,q,volume\n5,2,2.02988\n8,3,3.66386\n", encoding="utf-8")
    return path


@pytest.fixture
def worked_example():
    """C(3,2,1,3,3), the link K(121,36)."""
    from app.links.continued_fraction import ContinuedFraction

    return ContinuedFraction((3, 2, 1, 3, 3))
