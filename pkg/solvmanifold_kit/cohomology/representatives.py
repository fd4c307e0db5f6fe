"""
Verification of listed cohomology representatives.

The basis of the complex is treated as orthonormal, so every adjoint is a
conjugate transpose and harmonicity is a set of exact linear conditions.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..domain.gaussian import ZERO, ScalarInput
from ..domain.matrix import ExactMatrix, Scalar, Vector, span_rank
from ..utilities.constants import Theory
from .double_complex import Bidegree, DoubleComplex
from .theories import cohomology

logger = logging.getLogger(__name__)

FormList = Sequence[Mapping[str, ScalarInput]]


@dataclass
class _Conditions:
    """Linear data of one theory at one bidegree (or total degree)."""

    dim: int
    cocycle: list[ExactMatrix] = field(default_factory=list)
    coboundary: list[ExactMatrix] = field(default_factory=list)
    adjoint_of: list[ExactMatrix] = field(default_factory=list)


def _bigraded_conditions(dc: DoubleComplex, theory: Theory, p: int, q: int) -> _Conditions:
    del_in, delbar_in = dc.del_at(p - 1, q), dc.delbar_at(p, q - 1)
    if theory == Theory.DOLBEAULT:
        return _Conditions(dc.dim(p, q), [dc.delbar_at(p, q)], [delbar_in], [delbar_in])
    if theory == Theory.BOTT_CHERN:
        ddbar_in = dc.ddbar_at(p - 1, q - 1)
        return _Conditions(
            dc.dim(p, q), [dc.del_at(p, q), dc.delbar_at(p, q)], [ddbar_in], [ddbar_in]
        )
    return _Conditions(
        dc.dim(p, q), [dc.ddbar_at(p, q)], [del_in, delbar_in], [del_in, delbar_in]
    )


def _embed(dc: DoubleComplex, k: int, bidegree: Bidegree, vector: Vector) -> Vector:
    full: list[Scalar] = [ZERO] * dc.total_dim(k)
    start = dc.block_offset(k, bidegree)
    full[start : start + len(vector)] = list(vector)
    return tuple(full)


def _check_group(label: str, conditions: _Conditions, vectors: list[Vector]) -> bool:
    """Cocycle, harmonicity, independence and count for one group of forms."""
    for vector in vectors:
        for operator in conditions.cocycle:
            if any(operator.apply(vector)):
                logger.info(f"{label}: {vector} is not a cocycle")
                return False
        for operator in conditions.adjoint_of:
            if operator.cols and any(operator.conjugate_transpose().apply(vector)):
                logger.info(f"{label}: {vector} is not harmonic")
                return False
    boundaries = [m.column(j) for m in conditions.coboundary for j in range(m.cols)]
    base = span_rank(boundaries, conditions.dim)
    if span_rank(boundaries + vectors, conditions.dim) != base + len(vectors):
        logger.info(f"{label}: classes are not independent")
        return False
    return True


def verify_representatives(
    dc: DoubleComplex, theory: Theory | str, forms: Mapping[Bidegree, FormList]
) -> bool:
    """
    Check a list of representatives per bidegree against the computed cohomology.

    Each form must be a cocycle, harmonic for the orthonormal basis, independent
    of the others modulo coboundaries, and the count per bidegree must equal the
    computed dimension. For de Rham the forms are grouped by total degree.
    Raises ValidationError for a label outside its stated bidegree.
    """
    if isinstance(theory, str):
        theory = Theory.from_string(theory)
    table = cohomology(dc, theory)
    vectors = {
        (p, q): [tuple(dc.vector(p, q, form)) for form in listed]
        for (p, q), listed in forms.items()
    }

    if theory != Theory.DE_RHAM:
        for (p, q), group in vectors.items():
            if len(group) != table[(p, q)]:
                logger.info(f"{theory} ({p},{q}): {len(group)} forms for dimension {table[(p, q)]}")
                return False
            conditions = _bigraded_conditions(dc, theory, p, q)
            if not _check_group(f"{theory} ({p},{q})", conditions, group):
                return False
        return True

    by_degree: dict[int, list[Vector]] = {}
    for (p, q), group in vectors.items():
        k = p + q
        by_degree.setdefault(k, []).extend(_embed(dc, k, (p, q), v) for v in group)
    for k, group in sorted(by_degree.items()):
        if len(group) != table[k]:
            logger.info(f"de_rham degree {k}: {len(group)} forms for b_k = {table[k]}")
            return False
        d_in = dc.total_differential(k - 1)
        conditions = _Conditions(dc.total_dim(k), [dc.total_differential(k)], [d_in], [d_in])
        if not _check_group(f"de_rham degree {k}", conditions, group):
            return False
    return True
