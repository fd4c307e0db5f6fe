"""
Invariant Hermitian metrics: positivity, special metric conditions and
existence certificates for splitting-type structures.
"""

from .existence import (
    ExistenceCell,
    ExistenceCertificate,
    ExistenceTable,
    corollary_checks,
    existence_sample,
    existence_table,
    exists_metric,
    kahler_family,
    skt_family,
)
from .hermitian import HermitianMetric, fundamental_form, is_positive
from .predicates import metric_predicate

__all__ = [
    "ExistenceCell",
    "ExistenceCertificate",
    "ExistenceTable",
    "HermitianMetric",
    "corollary_checks",
    "existence_sample",
    "existence_table",
    "exists_metric",
    "fundamental_form",
    "is_positive",
    "kahler_family",
    "metric_predicate",
    "skt_family",
]
