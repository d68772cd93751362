"""Read-only HTTP mirror of the command-line interface."""

from app.api.main import app, create_app, run_server

__all__ = ["app", "create_app", "run_server"]
