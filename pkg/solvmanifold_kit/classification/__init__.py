"""
Classification of splitting-type complex structures into the catalog s1..s12.
"""

from .classifier import (
    ClassificationResult,
    classify,
    classify_many,
    jc_splitting_params,
    random_splitting_params,
)
from .invariants import CaseInvariants, case_invariants
from .normalize import normalize_label, normalized
from .rows import RowMatch, match_row
from .tables import (
    CANONICAL_WITNESSES,
    TABLE_REPRESENTATIVES,
    ClassificationSweep,
    ClassificationTable,
    canonical_violation,
    canonical_witnesses,
    classification_sweep,
    classification_tables,
    has_trivial_canonical_bundle,
)

__all__ = [
    "CANONICAL_WITNESSES",
    "TABLE_REPRESENTATIVES",
    "CaseInvariants",
    "ClassificationResult",
    "ClassificationSweep",
    "ClassificationTable",
    "RowMatch",
    "canonical_violation",
    "canonical_witnesses",
    "case_invariants",
    "classification_sweep",
    "classification_tables",
    "classify",
    "classify_many",
    "has_trivial_canonical_bundle",
    "jc_splitting_params",
    "match_row",
    "normalize_label",
    "normalized",
    "random_splitting_params",
]
