"""
Property-based testing suite for Solvmanifold-Kit.

Uses Hypothesis to generate scalars, matrices, forms and splitting
parameters; sympy serves as an independent oracle.
"""
