"""
Application configuration settings
"""
from typing import Optional
import os

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


# Numerical tolerances
IDENTITY_TOLERANCE = 1e-12
ACCUMULATION_TOLERANCE = 1e-9
STRICT_TOLERANCE = 1e-12
RELATIVE_TOLERANCE = 1e-9
TIE_TOLERANCE = 1e-9

# Exhaustive enumeration limits
MAX_ENUMERATION_N = 6
DEFAULT_ENUMERATION_CAP = 5


class Settings(BaseSettings):
    """Application settings"""

    # Application
    APP_NAME: str = "vdb-digraph"
    APP_VERSION: str = "1.0.0"

    # Logging
    VERBOSE: bool = False
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "json"

    # Oracle
    DEFAULT_WORKERS: Optional[int] = None
    BLOCK_SIZE: int = 1 << 16

    # Theorem verifier
    HYPOTHESIS_N_MAX: int = 100

    # Randomized helpers
    RANDOM_SEED: int = 20240601

    @field_validator("LOG_FORMAT")
    @classmethod
    def check_log_format(cls, v: str) -> str:
        if v not in ("json", "console"):
            raise ValueError("LOG_FORMAT must be 'json' or 'console'")
        return v

    @field_validator("BLOCK_SIZE")
    @classmethod
    def check_block_size(cls, v: int) -> int:
        if v < 1:
            raise ValueError("BLOCK_SIZE must be positive")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="VDB_",
        case_sensitive=True,
        extra="ignore",
    )

    @property
    def effective_workers(self) -> int:
        """DEFAULT_WORKERS, or the available parallelism when unset"""
        return self.DEFAULT_WORKERS or os.cpu_count() or 1

    @property
    def effective_log_level(self) -> str:
        return "DEBUG" if self.VERBOSE else self.LOG_LEVEL.upper()


# Create settings instance
settings = Settings()
