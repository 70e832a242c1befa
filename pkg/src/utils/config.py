"""
Configuration management using Pydantic Settings.
Loads PREVENTKIT_* environment variables (and an optional .env file).
"""
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="PREVENTKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Sampling
    seed: Optional[int] = Field(
        default=None,
        description="Sampling seed; overrides --seed when set"
    )
    sample_cap: int = Field(default=100, ge=1, description="Per-form sample cap")

    # Corpus processing
    workers: int = Field(default=4, ge=1, le=64, description="Document-level worker threads")
    negation_window: int = Field(
        default=10,
        ge=1,
        description="Tokens after a TC-family pattern searched for 'not'/'never'"
    )

    # Reporting
    report_precision: int = Field(default=3, ge=1, le=12, description="Decimals in text reports")

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Optional log file path")


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get the global settings instance (singleton pattern).

    Returns:
        Settings: The toolkit settings
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """
    Reload settings from environment (useful for testing).

    Returns:
        Settings: Freshly loaded settings
    """
    global _settings
    _settings = Settings()
    return _settings
