"""
Workbench configuration.

Defaults come from the environment preset; ``SOLVKIT_*`` variables (also read
from a ``.env`` file) override them after validation.
"""

import contextlib
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from ..utilities.constants import (
    DEFAULT_CLASSIFICATION_SAMPLES,
    DEFAULT_SAMPLE_HEIGHT,
    DEFAULT_SAMPLE_SEED,
    OutputFormat,
    ValidationError,
)
from .environment import Environment, get_environment_config

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class WorkbenchConfig:
    """
    Settings shared by every command.

    Contains the output format, logging level and the parameters of the
    random classification sweep.
    """

    output_format: OutputFormat = OutputFormat.TEXT
    log_level: str = "WARNING"
    classification_samples: int = DEFAULT_CLASSIFICATION_SAMPLES
    sample_seed: int = DEFAULT_SAMPLE_SEED
    sample_height: int = DEFAULT_SAMPLE_HEIGHT
    fixtures_dir: Path | None = None

    def __post_init__(self) -> None:
        """Validate configuration, then apply environment overrides."""
        self._validate_configuration()
        self._apply_environment_overrides()

    def _validate_configuration(self) -> None:
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValidationError(f"Unknown log level: {self.log_level}")
        if self.classification_samples < 0:
            raise ValidationError("Classification samples must be non-negative")
        if self.sample_height < 1:
            raise ValidationError("Sample height must be positive")

    def _apply_environment_overrides(self) -> None:
        if (fmt := os.getenv("SOLVKIT_FORMAT")) and fmt.lower() in ("text", "json"):
            self.output_format = OutputFormat(fmt.lower())

        if (log_level := os.getenv("SOLVKIT_LOG_LEVEL")) and log_level.upper() in LOG_LEVELS:
            self.log_level = log_level.upper()

        if samples := os.getenv("SOLVKIT_SAMPLES"):
            with contextlib.suppress(ValueError):
                self.classification_samples = max(0, int(samples))

        if seed := os.getenv("SOLVKIT_SEED"):
            with contextlib.suppress(ValueError):
                self.sample_seed = int(seed)

    def apply_overrides(self, **overrides: Any) -> None:
        """Apply command-line values; ``None`` leaves a setting unchanged."""
        for key, value in overrides.items():
            if value is not None and hasattr(self, key):
                setattr(self, key, value)
        self._validate_configuration()

    def to_dict(self) -> dict[str, Any]:
        return {
            "output_format": self.output_format,
            "log_level": self.log_level,
            "classification_samples": self.classification_samples,
            "sample_seed": self.sample_seed,
            "sample_height": self.sample_height,
            "fixtures_dir": self.fixtures_dir,
        }


def get_config(environment: Environment | None = None) -> WorkbenchConfig:
    """Load ``.env``, pick the environment preset and build the configuration."""
    load_dotenv()
    preset = get_environment_config(environment)
    config = WorkbenchConfig(
        log_level=preset.log_level, classification_samples=preset.classification_samples
    )
    logger.debug(f"Configuration for {preset.environment.value}: {config.to_dict()}")
    return config
