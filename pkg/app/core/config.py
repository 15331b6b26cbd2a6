"""
Configuration management for cycinv using Pydantic Settings.

This module handles the runtime parameters of the library, the CLI and
the HTTP service: logging, sweep limits, worker counts and which
resolution constructions are loaded. Environment variables are
automatically loaded and validated.
"""

from pathlib import Path
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    All settings can be overridden via environment variables prefixed
    with CYCINV_ (e.g., CYCINV_PMAX_LIMIT).
    """

    # Application Metadata
    app_name: str = "cycinv"
    app_version: str = "1.0.0"
    debug: bool = False

    # HTTP Service Configuration
    host: str = Field(default="127.0.0.1", description="Host to bind the API server")
    api_port: int = Field(default=8000, description="FastAPI service port")

    # Logging Configuration
    log_path: Path = Field(
        default=Path("data/logs"),
        description="Directory for log files"
    )
    log_level: str = Field(default="WARNING", description="Logging level")
    log_to_file: bool = Field(default=False, description="Enable file logging")

    # Sweep Configuration
    pmax_limit: int = Field(
        default=1000,
        ge=2,
        description="Largest prime bound accepted by sweeps"
    )
    sweep_jobs: int = Field(
        default=1,
        ge=1,
        description="Default number of sweep worker processes"
    )

    # Resolution Construction Configuration
    enabled_methods: List[str] = Field(
        default=["general", "hilbert_burch", "eagon_northcott"],
        description="Resolution construction modules to load"
    )
    euler_degree_factor: int = Field(
        default=3,
        ge=1,
        description="Hilbert identity is checked up to degree factor * p"
    )

    # Output Configuration
    default_format: str = Field(default="table", description="Default CLI output format")

    model_config = SettingsConfigDict(
        env_prefix="CYCINV_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False
    )

    def ensure_directories(self) -> None:
        """Create the log directory when file logging is enabled."""
        if self.log_to_file:
            self.log_path.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = Settings()
settings.ensure_directories()
