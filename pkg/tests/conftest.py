"""
Pytest configuration and shared fixtures for Solvmanifold-Kit tests.

Registers the test markers, marks tests by directory and provides the
fixtures shared by unit, integration and property tests.
"""

import json
import logging
from collections.abc import Callable, Generator
from typing import Any

import pytest

from solvmanifold_kit.cli import main
from solvmanifold_kit.geometry.coframe import SplittingParams

SOLVKIT_VARIABLES = (
    "SOLVKIT_ENV",
    "SOLVKIT_FORMAT",
    "SOLVKIT_LOG_LEVEL",
    "SOLVKIT_SAMPLES",
    "SOLVKIT_SEED",
)


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers and settings."""
    config.addinivalue_line("markers", "unit: mark test as unit test (fast, isolated)")
    config.addinivalue_line("markers", "integration: mark test as integration test (CLI runs)")
    config.addinivalue_line("markers", "property: mark test as Hypothesis property test")
    config.addinivalue_line("markers", "benchmark: mark test as benchmark")
    config.addinivalue_line("markers", "slow: mark test as slow running")


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on test location."""
    for item in items:
        path = str(item.fspath)
        if "unit" in path:
            item.add_marker(pytest.mark.unit)
        elif "integration" in path:
            item.add_marker(pytest.mark.integration)
        elif "property" in path:
            item.add_marker(pytest.mark.property)
        elif "benchmark" in path:
            item.add_marker(pytest.mark.benchmark)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch) -> Generator[None, None, None]:
    """Run every test without SOLVKIT_* overrides from the caller's shell."""
    for name in SOLVKIT_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("SOLVKIT_ENV", "testing")
    yield
    logging.getLogger().setLevel(logging.WARNING)


@pytest.fixture
def run_cli(capsys) -> Callable[..., tuple[int, str, str]]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def run_cli_json(run_cli) -> Callable[..., tuple[int, dict[str, Any]]]:
    """Run the CLI with ``--format json`` and decode stdout."""

    def _run(*argv: str) -> tuple[int, dict[str, Any]]:
        code, out, _ = run_cli("--format", "json", *argv)
        return code, json.loads(out)

    return _run


# Structure fixtures
@pytest.fixture
def kt_params() -> SplittingParams:
    """The KT family with eps = 1 (algebra s1)."""
    return SplittingParams.kt(1)


@pytest.fixture
def nakamura_params() -> SplittingParams:
    """A = 1, B = -1, eps = 0: the complex parallelizable Nakamura structure."""
    return SplittingParams.c2(1, -1, 0)
