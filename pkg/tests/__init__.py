"""
Test package for Solvmanifold-Kit.

Unit, integration, property and benchmark suites for the exact workbench.
"""

__all__ = [
    "benchmark",  # pytest-benchmark timings
    "conftest",  # Pytest configuration and fixtures
    "integration",  # CLI runs
    "property",  # Hypothesis properties
    "unit",  # Unit test suite
]
