"""
Real Lie algebras stored on the dual.

A RealLieAlgebra keeps the Chevalley-Eilenberg differentials d e^k as real
2-forms; brackets and adjoint matrices are derived on demand.
"""

import logging
from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Any

from ..domain.matrix import ExactMatrix
from ..geometry.forms import Form

logger = logging.getLogger(__name__)


class RealLieAlgebra:
    """
    Real Lie algebra given by its structure equations (d e^1, ..., d e^n).

    Convention: d e^k(x, y) = -e^k([x, y]), so for i < j the bracket
    coefficient c_ij^k is minus the e^{ij} coefficient of d e^k.
    """

    __slots__ = ("diff", "dim", "name")

    def __init__(
        self,
        differentials: Sequence[Form | Mapping[tuple[int, int], Any]],
        name: str | None = None,
    ) -> None:
        """Create from one 2-form (or pair map, 0-based) per basis covector."""
        forms: list[Form] = []
        for entry in differentials:
            form = entry if isinstance(entry, Form) else Form(dict(entry))
            if form.degrees() - {2}:
                raise ValueError(f"Structure equations must be 2-forms, got degrees {form.degrees()}")
            forms.append(form)
        dim = len(forms)
        for form in forms:
            for key, _ in form.items():
                if max(key) >= dim:
                    raise ValueError(f"Index {max(key) + 1} out of range for dimension {dim}")
        self.diff: tuple[Form, ...] = tuple(forms)
        self.dim = dim
        self.name = name

    @classmethod
    def abelian(cls, dim: int) -> "RealLieAlgebra":
        return cls([Form.zero()] * dim, name=f"R^{dim}")

    @classmethod
    def from_salamon(cls, text: str, name: str | None = None) -> "RealLieAlgebra":
        """Parse Salamon notation."""
        from .salamon import parse_salamon

        algebra = parse_salamon(text)
        algebra.name = name
        return algebra

    def to_salamon(self) -> str:
        from .salamon import render_salamon

        return render_salamon(self)

    def d(self, form: Form) -> Form:
        """Chevalley-Eilenberg differential, extended as a derivation."""
        return form.derivation(self.diff)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """c_ij^k with [e_i, e_j] = sum_k c_ij^k e_k (0-based)."""
        if i == j:
            return Fraction(0)
        value = self.diff[k].coefficient((i, j))
        return Fraction(-value)

    def bracket(self, x: Sequence[Any], y: Sequence[Any]) -> tuple[Any, ...]:
        """Bracket of two vectors given in the dual basis e_1..e_n."""
        out: list[Any] = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                for k in range(self.dim):
                    c = self.structure_constant(i, j, k)
                    if c:
                        out[k] = out[k] + xi * yj * c
        return tuple(out)

    def ad_matrix(self, i: int) -> ExactMatrix:
        """Matrix of ad(e_i) acting on column vectors."""
        return ExactMatrix(
            [[self.structure_constant(i, j, k) for j in range(self.dim)] for k in range(self.dim)],
            cols=self.dim,
        )

    def jacobi_check(self) -> bool:
        """d(d e^k) = 0 for every k."""
        for k, form in enumerate(self.diff):
            if not self.d(form).is_zero():
                logger.debug(f"d^2 e^{k + 1} != 0 in {self.name or 'algebra'}")
                return False
        return True

    def unimodular_check(self) -> bool:
        """trace(ad e_i) = 0 for every basis vector."""
        return all(self.ad_matrix(i).trace() == 0 for i in range(self.dim))

    def is_abelian(self) -> bool:
        return all(form.is_zero() for form in self.diff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealLieAlgebra):
            return False
        return self.dim == other.dim and self.diff == other.diff

    def __hash__(self) -> int:
        return hash(self.diff)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"RealLieAlgebra({label}{self.to_salamon()})"


def jacobi_check(g: RealLieAlgebra) -> bool:
    """True iff d^2 = 0 on every generator."""
    return g.jacobi_check()


def unimodular_check(g: RealLieAlgebra) -> bool:
    """True iff every adjoint operator is traceless."""
    return g.unimodular_check()
