"""Configuration management for the two-bridge complexity toolkit."""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables.

    None of these change a computed bound; they control logging,
    persistence and how the census is scheduled.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TWOBRIDGE_",
        extra="ignore",
    )

    # Observability Configuration
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO", description="Logging level"
    )
    runs_dir: str = Field(default="runs", description="Directory for saved runs and traces")
    trace_enabled: bool = Field(default=True, description="Write ledger traces to disk")

    # Census Configuration
    census_parallel: bool = Field(
        default=True, description="Compute census rows on a worker pool"
    )
    census_workers: int = Field(default=4, ge=1, description="Worker count for the census")
    volume_slack: float = Field(
        default=1e-9,
        ge=0.0,
        description="Slack subtracted from vol/v3 before taking the ceiling",
    )

    # Output Configuration
    default_format: Literal["table", "json", "csv"] = Field(
        default="table", description="Default CLI output format"
    )

    # API Configuration
    api_host: str = Field(default="0.0.0.0", description="API host")
    api_port: int = Field(default=8000, description="API port")

    @property
    def runs_path(self) -> Path:
        """Get the runs directory as a Path object."""
        return Path(self.runs_dir)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
