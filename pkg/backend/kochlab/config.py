"""
KochLab Configuration

Defaults for the CLI. The only environment input is LOG_LEVEL (optionally
from a .env file in the working directory); everything else comes from flags.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from ..utils.logger import LOG_LEVELS
from .errors import ConfigError
from .serialize import FORMATS

MAX_PRECISION = 64


@dataclass(frozen=True)
class KochConfig:
    """Runtime configuration"""

    precision: int = 12
    qmax: int = 1000
    output_format: str = "text"
    log_level: str = "WARNING"
    workers: Optional[int] = None  # process pool size for search-triples --parallel

    @classmethod
    def from_env(cls, env_file: Optional[Path] = None) -> "KochConfig":
        """Load configuration from the environment"""
        path = env_file if env_file is not None else Path.cwd() / ".env"
        if path.exists():
            load_dotenv(path)
        return cls(log_level=os.getenv("LOG_LEVEL", "WARNING").upper())

    def with_overrides(self, **values) -> "KochConfig":
        """Copy with every non-None value applied."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    def validate(self) -> None:
        """Validate configuration (fail fast if invalid)"""
        if not 1 <= self.precision <= MAX_PRECISION:
            raise ConfigError(f"precision must be between 1 and {MAX_PRECISION}, got {self.precision}")

        if self.output_format not in FORMATS:
            raise ConfigError(f"output format must be one of {FORMATS}, got {self.output_format!r}")

        if self.qmax < 3:
            raise ConfigError(f"qmax must be at least 3, got {self.qmax}")

        if self.workers is not None and self.workers < 1:
            raise ConfigError("workers must be at least 1")

        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}")
