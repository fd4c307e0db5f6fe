"""
Configuration management for the workbench.
"""

from .environment import Environment, EnvironmentConfig, get_environment_config
from .workbench_config import WorkbenchConfig, get_config

__all__ = [
    "Environment",
    "EnvironmentConfig",
    "WorkbenchConfig",
    "get_config",
    "get_environment_config",
]
