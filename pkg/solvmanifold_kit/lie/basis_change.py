"""
Basis changes between Lie algebras and the reduction changes ChA..ChH.

A BasisChange with matrix P describes a new coframe f^k = sum_j P[k][j] e^j
written in the coframe e of the source algebra.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..domain.matrix import ExactMatrix
from ..geometry.forms import Form
from ..utilities.constants import REAL_DIMENSION, ValidationError
from .algebra import RealLieAlgebra

logger = logging.getLogger(__name__)

APPENDIX_CHANGES: tuple[str, ...] = ("ChA", "ChB", "ChC", "ChD", "ChE", "ChF", "ChG", "ChH")

# substitution tables: target index -> (coefficient, source index), 1-based;
# "L" stands for the parameter lambda
_SUBSTITUTIONS: dict[str, dict[int, tuple[Any, int]]] = {
    "ChA": {2: (1, 4), 4: (1, 2)},
    "ChB": {3: (1, 4), 4: (1, 3)},
    "ChC": {2: (-1, 2), 4: (-1, 4), 5: (-1, 5)},
    "ChD": {4: (-1, 4)},
    "ChE": {1: (1, 3), 2: (-1, 4), 3: (1, 1), 4: (-1, 2), 5: ("-L", 5), 6: (1, 6)},
    "ChF": {1: (-1, 5), 3: (1, 1), 5: (1, 3)},
    "ChG": {1: (1, 3), 2: (1, 4), 3: (1, 1), 4: (1, 2), 5: (1, 5), 6: (1, 6)},
    "ChH": {1: (1, 3), 2: (1, 4), 3: (1, 1), 4: (1, 2), 5: ("L", 5), 6: (-1, 6)},
}


@dataclass(frozen=True)
class BasisChange:
    """Invertible change of coframe f = P e."""

    matrix: ExactMatrix
    name: str = "custom"

    def __post_init__(self) -> None:
        if not self.matrix.is_invertible():
            raise ValidationError(f"Basis change {self.name} is not invertible")

    @classmethod
    def identity(cls, n: int = REAL_DIMENSION) -> "BasisChange":
        return cls(ExactMatrix.identity(n), "Id")

    def compose(self, first: "BasisChange") -> "BasisChange":
        """The change obtained by applying ``first`` and then ``self``."""
        return BasisChange(self.matrix @ first.matrix, f"{self.name}*{first.name}")

    def inverse(self) -> "BasisChange":
        return BasisChange(self.matrix.inverse(), f"{self.name}^-1")

    def images(self) -> list[Form]:
        """f^k as 1-forms in the source coframe."""
        return coframe_images(self.matrix)

    def to_rows(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.matrix.entries()]


def coframe_images(matrix: ExactMatrix) -> list[Form]:
    """Row k of the matrix as the 1-form sum_j M[k][j] e^j."""
    return [Form({(j,): matrix[k, j] for j in range(matrix.cols)}) for k in range(matrix.rows)]


def appendix_change(name: str, lam: Any = None) -> BasisChange:
    """Matrix of the named reduction change; ChE and ChH need a nonzero lambda."""
    if name not in _SUBSTITUTIONS:
        raise ValidationError(f"Unknown change {name!r}; expected one of {APPENDIX_CHANGES}")
    needs_lambda = name in ("ChE", "ChH")
    lam_value = Fraction(lam) if lam is not None else None
    if needs_lambda and not lam_value:
        raise ValidationError(f"{name} requires a nonzero lambda")
    rows = [[Fraction(int(i == j)) for j in range(REAL_DIMENSION)] for i in range(REAL_DIMENSION)]
    for target, (coeff, source) in _SUBSTITUTIONS[name].items():
        if coeff == "L":
            value = lam_value
        elif coeff == "-L":
            value = -lam_value if lam_value is not None else None
        else:
            value = Fraction(coeff)
        rows[target - 1] = [Fraction(0)] * REAL_DIMENSION
        rows[target - 1][source - 1] = value
    label = f"{name}({lam_value})" if needs_lambda else name
    return BasisChange(ExactMatrix(rows), label)


def transport(src: RealLieAlgebra, change: BasisChange | ExactMatrix) -> RealLieAlgebra:
    """Structure equations of ``src`` rewritten in the coframe f = P e."""
    matrix = change.matrix if isinstance(change, BasisChange) else change
    n = src.dim
    inverse_images = coframe_images(matrix.inverse())  # e^j in terms of f
    forms = []
    for k in range(n):
        d_fk = Form.zero()
        for j in range(n):
            if matrix[k, j]:
                d_fk = d_fk + src.diff[j].scale(matrix[k, j])
        forms.append(d_fk.substitute(inverse_images))
    return RealLieAlgebra(forms)


def verify_isomorphism(
    src: RealLieAlgebra, tgt: RealLieAlgebra, change: BasisChange | ExactMatrix
) -> bool:
    """
    True iff f = P e carries the structure equations of ``tgt`` inside ``src``.

    For every k: sum_j P[k][j] d_src(e^j) equals d_tgt(f^k) with each f^a
    replaced by its expression in e.
    """
    matrix = change.matrix if isinstance(change, BasisChange) else change
    if src.dim != tgt.dim:
        raise ValueError(f"Dimension mismatch: {src.dim} vs {tgt.dim}")
    if matrix.shape != (src.dim, src.dim):
        raise ValueError(f"Basis change of shape {matrix.shape} for dimension {src.dim}")
    if not matrix.is_invertible():
        raise ValueError("Basis change is singular")
    images = coframe_images(matrix)
    for k in range(src.dim):
        lhs = Form.zero()
        for j in range(src.dim):
            if matrix[k, j]:
                lhs = lhs + src.diff[j].scale(matrix[k, j])
        rhs = tgt.diff[k].substitute(images)
        if lhs != rhs:
            logger.debug(f"Isomorphism check fails at f^{k + 1}")
            return False
    return True
