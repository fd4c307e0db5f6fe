"""
Integration test suite for Solvmanifold-Kit.

Runs the CLI in-process and checks exit codes and JSON payloads.
"""
