"""
Exact lattice certificates for G5^alpha via conjugation to an integer matrix.
"""

from .certificate import (
    LatticeCertificate,
    alpha_expression,
    certificate,
    conjugator,
    discriminant,
    exp_ad_at_tau,
    exp_minus_tau,
    expected_charpoly,
    integer_matrix,
    render_charpoly,
)

__all__ = [
    "LatticeCertificate",
    "alpha_expression",
    "certificate",
    "conjugator",
    "discriminant",
    "exp_ad_at_tau",
    "exp_minus_tau",
    "expected_charpoly",
    "integer_matrix",
    "render_charpoly",
]
