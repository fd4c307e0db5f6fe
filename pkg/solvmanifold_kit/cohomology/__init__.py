"""
Double complexes and their cohomology.

Exact Dolbeault, Bott-Chern, Aeppli and de Rham dimensions, the direct
∂∂̄-lemma decision and verification of listed representatives.
"""

from .ddbar import DdbarFailure, ddbar_failures, ddbar_lemma, lemma_b_sufficient
from .double_complex import DoubleComplex, form_combination, from_coframe, monomial_label
from .representatives import verify_representatives
from .theories import (
    CohomologyTable,
    bc_aeppli_duality,
    cohomology,
    conjugation_symmetric,
    frolicher_consistent,
    frolicher_defects,
)

__all__ = [
    "CohomologyTable",
    "DdbarFailure",
    "DoubleComplex",
    "bc_aeppli_duality",
    "cohomology",
    "conjugation_symmetric",
    "ddbar_failures",
    "ddbar_lemma",
    "form_combination",
    "from_coframe",
    "frolicher_consistent",
    "frolicher_defects",
    "lemma_b_sufficient",
    "monomial_label",
    "verify_representatives",
]
