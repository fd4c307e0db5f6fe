"""
Exact scalars and matrices.

Gaussian rationals Q(i), real quadratic fields Q(sqrt d) and dense matrices
with fraction-free elimination over either.
"""

from .gaussian import GaussianRational, parse_rational, parse_scalar
from .matrix import ExactMatrix, intersection_dimension, span_rank
from .quadratic import QuadraticScalar

__all__ = [
    "ExactMatrix",
    "GaussianRational",
    "QuadraticScalar",
    "intersection_dimension",
    "parse_rational",
    "parse_scalar",
    "span_rank",
]
