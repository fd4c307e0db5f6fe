"""
Chevalley-Eilenberg cohomology of real Lie algebras.
"""

import logging
from itertools import combinations

from ..domain.matrix import ExactMatrix
from ..geometry.forms import Form
from .algebra import RealLieAlgebra

logger = logging.getLogger(__name__)


def differential_matrix(g: RealLieAlgebra, degree: int) -> ExactMatrix:
    """Matrix of d: Λ^degree → Λ^(degree+1) in the monomial bases."""
    source = list(combinations(range(g.dim), degree))
    target = list(combinations(range(g.dim), degree + 1))
    index = {key: i for i, key in enumerate(target)}
    columns = []
    for key in source:
        image = g.d(Form.monomial(key))
        column = [0] * len(target)
        for k, coeff in image.items():
            column[index[k]] = coeff
        columns.append(column)
    return ExactMatrix.from_columns(columns, rows=len(target)) if target else ExactMatrix([], cols=len(source))


def ce_cohomology(g: RealLieAlgebra) -> tuple[int, ...]:
    """Betti numbers b_0..b_dim of the Chevalley-Eilenberg complex."""
    ranks = [differential_matrix(g, k).rank() for k in range(g.dim + 1)]
    betti = []
    for k in range(g.dim + 1):
        dim_k = len(list(combinations(range(g.dim), k)))
        incoming = ranks[k - 1] if k > 0 else 0
        betti.append(dim_k - ranks[k] - incoming)
    logger.debug(f"CE Betti numbers of {g.name or 'algebra'}: {betti}")
    return tuple(betti)
