"""
Finite bigraded double complexes with exact ∂ and ∂̄ matrices.

Bidegrees run over 0 <= p, q <= n. Each bidegree has an ordered list of basis
labels; ``del_[(p, q)]`` maps (p, q) to (p+1, q) and ``delbar[(p, q)]`` maps
(p, q) to (p, q+1), columns indexed by the source basis.
"""

import logging
from collections.abc import Mapping, Sequence
from typing import Any

from ..domain.gaussian import ONE, ZERO, GaussianRational, ScalarInput
from ..domain.matrix import ExactMatrix
from ..geometry.coframe import Coframe
from ..geometry.forms import Form, Key, bidegree_basis, render_complex_form
from ..utilities.constants import (
    DifferentialKind,
    IntegrabilityError,
    InternalConsistencyError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Bidegree = tuple[int, int]


class DoubleComplex:
    """Bigraded vector spaces with anticommuting square-zero ∂ and ∂̄."""

    def __init__(
        self,
        n: int,
        bases: Mapping[Bidegree, Sequence[str]],
        del_: Mapping[Bidegree, ExactMatrix],
        delbar: Mapping[Bidegree, ExactMatrix],
        conjugation: Mapping[str, str] | None = None,
        name: str | None = None,
    ) -> None:
        """Create and check shapes plus ∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0."""
        self.n = n
        self.name = name
        self.bases: dict[Bidegree, tuple[str, ...]] = {
            (p, q): tuple(bases.get((p, q), ())) for p in range(n + 1) for q in range(n + 1)
        }
        self.conjugation = dict(conjugation) if conjugation is not None else None
        self.del_ = {pq: self._matrix(del_, pq, (pq[0] + 1, pq[1])) for pq in self.bases}
        self.delbar = {pq: self._matrix(delbar, pq, (pq[0], pq[1] + 1)) for pq in self.bases}
        self._check_axioms()
        logger.debug(f"Double complex {name or ''} with dimensions {self.dimensions()}")

    def _matrix(
        self, given: Mapping[Bidegree, ExactMatrix], source: Bidegree, target: Bidegree
    ) -> ExactMatrix:
        rows, cols = self.dim(target), self.dim(source)
        matrix = given.get(source)
        if matrix is None:
            return ExactMatrix.zeros(rows, cols, ZERO)
        if matrix.shape != (rows, cols):
            raise ValueError(f"Matrix at {source} has shape {matrix.shape}, expected {(rows, cols)}")
        return matrix

    def _check_axioms(self) -> None:
        for p, q in self.bases:
            checks = {
                "∂²": self.del_at(p + 1, q) @ self.del_at(p, q),
                "∂̄²": self.delbar_at(p, q + 1) @ self.delbar_at(p, q),
                "∂∂̄ + ∂̄∂": self.del_at(p, q + 1) @ self.delbar_at(p, q)
                + self.delbar_at(p + 1, q) @ self.del_at(p, q),
            }
            for name, product in checks.items():
                if not product.is_zero():
                    raise InternalConsistencyError(f"{name} != 0 at bidegree {(p, q)}")

    def dim(self, p: int, q: int | None = None) -> int:
        """Dimension of (p, q); accepts a bidegree tuple as the single argument."""
        pq: Any = p if q is None else (p, q)
        return len(self.bases.get(pq, ()))

    def dimensions(self) -> dict[Bidegree, int]:
        return {pq: len(labels) for pq, labels in self.bases.items()}

    def in_range(self, p: int, q: int) -> bool:
        return 0 <= p <= self.n and 0 <= q <= self.n

    def del_at(self, p: int, q: int) -> ExactMatrix:
        """∂ on (p, q), zero outside the grid."""
        if self.in_range(p, q):
            return self.del_[(p, q)]
        return ExactMatrix.zeros(self.dim(p + 1, q), 0, ZERO)

    def delbar_at(self, p: int, q: int) -> ExactMatrix:
        if self.in_range(p, q):
            return self.delbar[(p, q)]
        return ExactMatrix.zeros(self.dim(p, q + 1), 0, ZERO)

    def ddbar_at(self, p: int, q: int) -> ExactMatrix:
        """∂∂̄ from (p, q) to (p+1, q+1)."""
        return self.del_at(p, q + 1) @ self.delbar_at(p, q)

    def total_degree_bidegrees(self, k: int) -> list[Bidegree]:
        return [(p, k - p) for p in range(k + 1) if self.in_range(p, k - p)]

    def total_dim(self, k: int) -> int:
        return sum(self.dim(pq) for pq in self.total_degree_bidegrees(k))

    def block_offset(self, k: int, bidegree: Bidegree) -> int:
        """Position of the (p, q) block inside the total-degree-k space."""
        offset = 0
        for pq in self.total_degree_bidegrees(k):
            if pq == bidegree:
                return offset
            offset += self.dim(pq)
        raise ValueError(f"Bidegree {bidegree} does not have total degree {k}")

    def total_differential(self, k: int) -> ExactMatrix:
        """d = ∂ + ∂̄ from total degree k to k+1."""
        rows, cols = self.total_dim(k + 1), self.total_dim(k)
        entries: list[list[Any]] = [[ZERO] * cols for _ in range(rows)]
        for p, q in self.total_degree_bidegrees(k):
            col0 = self.block_offset(k, (p, q))
            for target, matrix in (((p + 1, q), self.del_at(p, q)), ((p, q + 1), self.delbar_at(p, q))):
                if not self.in_range(*target) or not self.dim(target):
                    continue
                row0 = self.block_offset(k + 1, target)
                for i in range(matrix.rows):
                    for j in range(matrix.cols):
                        if matrix[i, j]:
                            entries[row0 + i][col0 + j] = entries[row0 + i][col0 + j] + matrix[i, j]
        return ExactMatrix(entries, cols=cols)

    def vector(self, p: int, q: int, combination: Mapping[str, ScalarInput]) -> list[GaussianRational]:
        """Coordinates of a labelled combination in the (p, q) basis."""
        labels = self.bases.get((p, q), ())
        index = {label: i for i, label in enumerate(labels)}
        vec = [ZERO] * len(labels)
        for label, coeff in combination.items():
            if label not in index:
                raise ValidationError(f"{label} is not a basis element of bidegree {(p, q)}")
            vec[index[label]] = vec[index[label]] + GaussianRational.coerce(coeff)
        return vec

    def is_zero(self) -> bool:
        """True iff ∂ and ∂̄ vanish identically."""
        return all(m.is_zero() for m in self.del_.values()) and all(
            m.is_zero() for m in self.delbar.values()
        )

    def conjugation_closed(self) -> bool:
        """True iff conjugation carries the (p, q) basis onto the (q, p) basis."""
        if self.conjugation is None:
            return False
        for (p, q), labels in self.bases.items():
            images = [self.conjugation.get(label) for label in labels]
            if None in images or sorted(images) != sorted(self.bases[(q, p)]):  # type: ignore[type-var]
                return False
        return True

    def __repr__(self) -> str:
        return f"DoubleComplex({self.name or 'unnamed'}, n={self.n})"


def monomial_label(key: Key, n: int) -> str:
    """Basis label of a monomial, e.g. ``w12~3``; ``1`` for the constant."""
    if not key:
        return "1"
    return render_complex_form(Form({key: ONE}), n)


def _conjugate_key(key: Key, n: int) -> Key:
    return tuple(sorted(i + n if i < n else i - n for i in key))


def from_coframe(cf: Coframe) -> DoubleComplex:
    """The full invariant complex Λ^{•,•} of an integrable coframe."""
    if not cf.is_integrable():
        raise IntegrabilityError(f"Double complex needs an integrable structure: {cf.defect()}")
    n = cf.n
    bases: dict[Bidegree, list[str]] = {}
    del_: dict[Bidegree, ExactMatrix] = {}
    delbar: dict[Bidegree, ExactMatrix] = {}
    conjugation: dict[str, str] = {}
    for p in range(n + 1):
        for q in range(n + 1):
            keys = bidegree_basis(n, p, q)
            bases[(p, q)] = [monomial_label(key, n) for key in keys]
            for key in keys:
                conjugation[monomial_label(key, n)] = monomial_label(_conjugate_key(key, n), n)
            if p < n:
                del_[(p, q)] = cf.operator_matrix(DifferentialKind.DEL, p, q)
            if q < n:
                delbar[(p, q)] = cf.operator_matrix(DifferentialKind.DELBAR, p, q)
    return DoubleComplex(n, bases, del_, delbar, conjugation, name=cf.name)


def form_combination(form: Form, n: int) -> dict[str, GaussianRational]:
    """Labelled coefficients of a form, for use with ``DoubleComplex.vector``."""
    return {monomial_label(key, n): GaussianRational.coerce(c) for key, c in form.items()}
