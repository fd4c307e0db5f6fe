"""
Real Lie algebras given by structure equations.

Contains the Salamon-notation parser, the catalog s1..s12 of splitting-type
algebras and the basis changes between catalog members.
"""

from .algebra import RealLieAlgebra
from .basis_change import BasisChange, appendix_change, verify_isomorphism
from .catalog import CatalogLabel, catalog, label, raw_algebra
from .cohomology import ce_cohomology

__all__ = [
    "BasisChange",
    "CatalogLabel",
    "RealLieAlgebra",
    "appendix_change",
    "catalog",
    "ce_cohomology",
    "label",
    "raw_algebra",
    "verify_isomorphism",
]
