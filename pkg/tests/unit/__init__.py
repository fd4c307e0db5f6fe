"""
Unit test suite for Solvmanifold-Kit.

Fast, isolated tests for each package module.
"""
