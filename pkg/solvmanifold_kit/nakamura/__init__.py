"""
The J_C structures on the Nakamura manifold.

Characters and their lattice restrictions, the finite complexes B and C for
t = 0 and the deformed family, moduli of the splitting-type structures and the
reference cohomology tables.
"""

from .character_form import CharacterForm
from .characters import (
    Character,
    LatticeClass,
    NakamuraParams,
    SymbolicExponent,
    char_restriction_trivial,
    characters,
    lattice_class,
    lattice_exponents,
    odd_class_c,
)
from .complexes import b_generators, build_complexes, c_generators, complexes_agree_across_k
from .family import (
    CoframeEquivalence,
    DeformationReport,
    ModuliFamily,
    defnak_family,
    deformed_jc_coframe,
    equivalence_witness_JB,
    jc_coframe,
    jc_deformation_coefficients,
    moduli_family_coframe,
    moduli_invariant,
)
from .tables import (
    DeformationSummary,
    NakamuraTables,
    ParamsReport,
    TableCell,
    deformation_summary,
    nakamura_tables,
    params_report,
    summarize_deformation,
)

__all__ = [
    "Character",
    "CharacterForm",
    "CoframeEquivalence",
    "DeformationReport",
    "DeformationSummary",
    "LatticeClass",
    "ModuliFamily",
    "NakamuraParams",
    "NakamuraTables",
    "ParamsReport",
    "SymbolicExponent",
    "TableCell",
    "b_generators",
    "build_complexes",
    "c_generators",
    "char_restriction_trivial",
    "characters",
    "complexes_agree_across_k",
    "defnak_family",
    "deformation_summary",
    "deformed_jc_coframe",
    "equivalence_witness_JB",
    "jc_coframe",
    "jc_deformation_coefficients",
    "lattice_class",
    "lattice_exponents",
    "moduli_family_coframe",
    "moduli_invariant",
    "nakamura_tables",
    "odd_class_c",
    "params_report",
    "summarize_deformation",
]
