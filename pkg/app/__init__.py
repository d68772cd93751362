"""Two-bridge link complexity toolkit - main application package."""

__version__ = "0.1.0"
