"""
Environment presets for the workbench.

``SOLVKIT_ENV`` picks development, testing or production; the preset decides
the log level and how large the sampling sweeps are.
"""

import os
from dataclasses import dataclass
from enum import Enum

from ..utilities.constants import DEFAULT_CLASSIFICATION_SAMPLES


class Environment(Enum):
    """Environment types for configuration."""

    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"

    @classmethod
    def from_string(cls, env_str: str) -> "Environment":
        """Create Environment from string."""
        env_str = env_str.strip().lower()
        for env in cls:
            if env.value == env_str:
                return env
        return cls.DEVELOPMENT


@dataclass(frozen=True)
class EnvironmentConfig:
    """Environment-specific settings."""

    environment: Environment
    log_level: str
    classification_samples: int

    @classmethod
    def for_development(cls) -> "EnvironmentConfig":
        return cls(Environment.DEVELOPMENT, "WARNING", DEFAULT_CLASSIFICATION_SAMPLES)

    @classmethod
    def for_testing(cls) -> "EnvironmentConfig":
        """Small sweeps and verbose logs."""
        return cls(Environment.TESTING, "DEBUG", 20)

    @classmethod
    def for_production(cls) -> "EnvironmentConfig":
        return cls(Environment.PRODUCTION, "WARNING", DEFAULT_CLASSIFICATION_SAMPLES)


def get_current_environment() -> Environment:
    """Current environment from ``SOLVKIT_ENV`` (default: development)."""
    return Environment.from_string(os.getenv("SOLVKIT_ENV", "development"))


def get_environment_config(environment: Environment | None = None) -> EnvironmentConfig:
    """
    Get configuration for the specified environment.

    Args:
        environment: Target environment (defaults to current)

    Returns:
        EnvironmentConfig for the specified environment
    """
    if environment is None:
        environment = get_current_environment()

    if environment == Environment.TESTING:
        return EnvironmentConfig.for_testing()
    if environment == Environment.PRODUCTION:
        return EnvironmentConfig.for_production()
    return EnvironmentConfig.for_development()
