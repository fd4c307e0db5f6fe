"""
Solvmanifold Kit - exact computations for splitting-type complex structures.

This package provides:
- Exact scalars over Q(i) and Q(sqrt d) with fraction-free linear algebra
- The catalog s1..s12 of six-dimensional unimodular solvable Lie algebras
- Classification of splitting-type complex structures into the catalog
- Existence of special Hermitian metrics with exact certificates
- Dolbeault, Bott-Chern, Aeppli and de Rham numbers of finite double complexes
- The Nakamura manifold structures J_C, their deformations and lattice certificates

Every answer is computed exactly; there is no floating point anywhere.
"""

__version__ = "1.0.0"
__author__ = "Solvmanifold-Kit Developers"
__description__ = "Exact workbench for complex structures on six-dimensional solvmanifolds"

from . import cli, utilities
from .classification import classify
from .cohomology import DoubleComplex, cohomology, ddbar_lemma
from .domain import ExactMatrix, GaussianRational, QuadraticScalar
from .geometry.coframe import Coframe, SplittingParams, splitting_coframe
from .lattice import certificate
from .lie import CatalogLabel, RealLieAlgebra
from .metrics import HermitianMetric, exists_metric
from .nakamura import NakamuraParams
from .utilities.constants import MetricKind, Theory, ValidationError

__all__ = [
    "CatalogLabel",
    "Coframe",
    "DoubleComplex",
    "ExactMatrix",
    "GaussianRational",
    "HermitianMetric",
    "MetricKind",
    "NakamuraParams",
    "QuadraticScalar",
    "RealLieAlgebra",
    "SplittingParams",
    "Theory",
    "ValidationError",
    "certificate",
    "classify",
    "cli",
    "cohomology",
    "ddbar_lemma",
    "exists_metric",
    "splitting_coframe",
    "utilities",
]
