"""Common utilities package."""

from app.common.config import Settings, get_settings
from app.common.errors import ComplexityError, ValidationError
from app.common.logger import get_logger

__all__ = ["Settings", "get_settings", "ComplexityError", "ValidationError", "get_logger"]
