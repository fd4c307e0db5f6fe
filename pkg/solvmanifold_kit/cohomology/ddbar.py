"""
Direct decision of the ∂∂̄-lemma on a finite double complex.

For every bidegree the closed forms (ker ∂ ∩ ker ∂̄) that are ∂-exact,
∂̄-exact or d-exact in the total complex must already be ∂∂̄-exact. Each
subspace is computed as an explicit spanning set and compared with im ∂∂̄.
"""

import logging
from dataclasses import dataclass
from typing import Any

from ..domain.matrix import ExactMatrix, Vector, contains_span, span_rank
from ..utilities.constants import InternalConsistencyError
from .double_complex import Bidegree, DoubleComplex
from .theories import frolicher_consistent, frolicher_defects

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DdbarFailure:
    """A closed pure-type form that is exact in some sense but not ∂∂̄-exact."""

    bidegree: Bidegree
    exactness: str
    witness: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        p, q = self.bidegree
        return {
            "p": p,
            "q": q,
            "exactness": self.exactness,
            "witness": {label: str(c) for label, c in self.witness.items()},
        }


def _columns(matrix: ExactMatrix) -> list[Vector]:
    return [matrix.column(j) for j in range(matrix.cols)]


def _images_in_kernel(source_map: ExactMatrix, constraint: ExactMatrix) -> list[Vector]:
    """source_map(y) for y in ker(constraint @ source_map)."""
    if source_map.cols == 0:
        return []
    composite = constraint @ source_map
    return [source_map.apply(y) for y in composite.kernel_basis()]


def _exact_in_bidegree(dc: DoubleComplex, p: int, q: int) -> list[Vector]:
    """Pure (p, q) vectors in the image of d_{k-1}."""
    k = p + q
    d_prev = dc.total_differential(k - 1)
    if d_prev.cols == 0:
        return []
    start = dc.block_offset(k, (p, q))
    stop = start + dc.dim(p, q)
    outside = [d_prev.row(i) for i in range(d_prev.rows) if not start <= i < stop]
    if outside:
        preimages = ExactMatrix(outside, cols=d_prev.cols).kernel_basis()
    else:
        preimages = _columns(ExactMatrix.identity(d_prev.cols))
    return [d_prev.apply(y)[start:stop] for y in preimages]


def _exact_subspaces(dc: DoubleComplex, p: int, q: int) -> dict[str, list[Vector]]:
    return {
        "∂-exact": _images_in_kernel(dc.del_at(p - 1, q), dc.delbar_at(p, q)),
        "∂̄-exact": _images_in_kernel(dc.delbar_at(p, q - 1), dc.del_at(p, q)),
        "d-exact": _exact_in_bidegree(dc, p, q),
    }


def _witness(
    dc: DoubleComplex, p: int, q: int, ddbar_image: list[Vector], vectors: list[Vector]
) -> dict[str, Any]:
    dim = dc.dim(p, q)
    for vector in vectors:
        if not contains_span(ddbar_image, [vector], dim):
            return {label: c for label, c in zip(dc.bases[(p, q)], vector, strict=True) if c}
    raise InternalConsistencyError(f"No witness found at bidegree {(p, q)}")


def ddbar_failures(dc: DoubleComplex) -> list[DdbarFailure]:
    """Every (bidegree, exactness) pair violating the ∂∂̄-lemma, with a witness."""
    failures: list[DdbarFailure] = []
    for p, q in sorted(dc.bases):
        dim = dc.dim(p, q)
        if dim == 0:
            continue
        ddbar_image = _columns(dc.ddbar_at(p - 1, q - 1))
        for exactness, vectors in _exact_subspaces(dc, p, q).items():
            if not vectors or span_rank(vectors, dim) == 0:
                continue
            if contains_span(ddbar_image, vectors, dim):
                continue
            witness = _witness(dc, p, q, ddbar_image, vectors)
            failures.append(DdbarFailure((p, q), exactness, witness))
    return failures


def ddbar_lemma(dc: DoubleComplex) -> bool:
    """
    Decide the ∂∂̄-lemma directly.

    A positive answer is cross-checked against the Frölicher identity
    Σ_{p+q=k} h_∂̄^{p,q} = b_k; a mismatch raises InternalConsistencyError.
    """
    failures = ddbar_failures(dc)
    if failures:
        first = failures[0]
        logger.info(
            f"∂∂̄-lemma fails for {dc!r} at {first.bidegree} ({first.exactness}): {first.witness}"
        )
        return False
    if not frolicher_consistent(dc):
        raise InternalConsistencyError(
            f"∂∂̄-lemma holds but Frölicher sums differ: {frolicher_defects(dc)}"
        )
    return True


def lemma_b_sufficient(b: DoubleComplex) -> bool:
    """True iff ∂ and ∂̄ vanish on ``b`` and conjugation pairs (p, q) with (q, p)."""
    result = b.is_zero() and b.conjugation_closed()
    logger.debug(f"Sufficient condition on {b!r}: {result}")
    return result
