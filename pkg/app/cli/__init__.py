"""Command-line interface."""

from app.cli.main import cli, dispatch, main

__all__ = ["cli", "dispatch", "main"]
