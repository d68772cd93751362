"""Logging utilities."""

import logging
import sys

from rich.console import Console
from rich.logging import RichHandler

from app.common.config import get_settings


def get_logger(name: str, use_rich: bool = True) -> logging.Logger:
    """Get a configured logger writing to stderr.

    Stdout is reserved for command output (tables, JSON, CSV), so every
    handler installed here targets stderr.

    Args:
        name: Logger name.
        use_rich: Whether to use rich console handler.

    Returns:
        Configured logger instance.
    """
    settings = get_settings()
    logger = logging.getLogger(name)

    # Avoid adding handlers multiple times
    if logger.handlers:
        return logger

    logger.setLevel(getattr(logging, settings.log_level))

    if use_rich:
        handler: logging.Handler = RichHandler(
            console=Console(stderr=True),
            show_time=True,
            show_path=False,
            markup=True,
        )
        fmt = "%(name)s - %(message)s"
    else:
        handler = logging.StreamHandler(sys.stderr)
        fmt = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    handler.setFormatter(logging.Formatter(fmt))
    logger.addHandler(handler)
    logger.propagate = False

    return logger


def set_level(level: str) -> None:
    """Apply a log level to every logger created under the app package.

    Args:
        level: Level name, e.g. "DEBUG".
    """
    numeric = getattr(logging, level.upper())
    for name, existing in logging.Logger.manager.loggerDict.items():
        if name.startswith("app") and isinstance(existing, logging.Logger):
            existing.setLevel(numeric)
