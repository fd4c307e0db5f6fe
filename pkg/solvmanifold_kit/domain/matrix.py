"""
Exact dense matrices over Q, Q(i) or Q(sqrt(d)).

Elimination is fraction-free (Bareiss) for ranks, determinants and echelon
forms; pivot rows are normalized only when a reduced form is requested.
"""

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any, Union

from .gaussian import GaussianRational
from .quadratic import QuadraticScalar

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, GaussianRational, QuadraticScalar]
Vector = tuple[Scalar, ...]


def _normalize(value: Any) -> Scalar:
    if isinstance(value, bool):
        raise TypeError("Booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction | GaussianRational | QuadraticScalar):
        return value
    raise TypeError(f"Unsupported matrix entry type: {type(value)}")


def conj(value: Scalar) -> Scalar:
    """Complex conjugate for Q(i), identity for Q (Galois conjugate for Q(sqrt d))."""
    if isinstance(value, Fraction):
        return value
    return value.conjugate()


class ExactMatrix:
    """
    Immutable rectangular matrix with exact entries.

    All entries are expected to live in a single field; ints are stored as
    Fractions.
    """

    __slots__ = ("_entries", "cols", "rows")

    def __init__(self, entries: Iterable[Iterable[Any]], cols: int | None = None) -> None:
        """Create from a row iterable; ``cols`` is required for matrices without rows."""
        rows = tuple(tuple(_normalize(x) for x in row) for row in entries)
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and rows and width != cols:
            raise ValueError(f"Declared {cols} columns but rows have {width}")
        if any(len(row) != width for row in rows):
            raise ValueError("Matrix rows must all have the same length")
        self._entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int, zero: Scalar | None = None) -> "ExactMatrix":
        """Zero matrix."""
        z = Fraction(0) if zero is None else zero * 0
        return cls([[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int, one: Scalar | None = None) -> "ExactMatrix":
        """Identity matrix; ``one`` selects the field."""
        o = Fraction(1) if one is None else one
        z = o * 0
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        """Diagonal matrix with the given entries."""
        n = len(values)
        z = _normalize(values[0]) * 0 if values else Fraction(0)
        return cls([[values[i] if i == j else z for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "ExactMatrix":
        """Build a matrix whose columns are the given vectors."""
        if not columns:
            return cls([[] for _ in range(rows)], cols=0) if rows else cls([], cols=0)
        return cls([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entries(self) -> tuple[tuple[Scalar, ...], ...]:
        """Entries as a tuple of row tuples."""
        return self._entries

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> Vector:
        return self._entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for row in self._entries for x in row)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix([[conj(x) for x in row] for row in self._entries], cols=self.cols)

    def conjugate_transpose(self) -> "ExactMatrix":
        return self.conjugate().transpose()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return False
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, self._entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2, strict=True)] for r1, r2 in zip(self._entries, other._entries, strict=True)],
            cols=self.cols,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2, strict=True)] for r1, r2 in zip(self._entries, other._entries, strict=True)],
            cols=self.cols,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-x for x in row] for row in self._entries], cols=self.cols)

    def scale(self, factor: Scalar | int) -> "ExactMatrix":
        """Multiply every entry by a scalar."""
        return ExactMatrix([[x * factor for x in row] for row in self._entries], cols=self.cols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        other_cols = [other.column(j) for j in range(other.cols)]
        result = []
        for row in self._entries:
            nonzero = [(k, x) for k, x in enumerate(row) if x]
            out_row = []
            for col in other_cols:
                acc: Any = Fraction(0)
                for k, x in nonzero:
                    if col[k]:
                        acc = acc + x * col[k]
                out_row.append(acc)
            result.append(out_row)
        return ExactMatrix(result, cols=other.cols)

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} does not match {self.cols} columns")
        out = []
        for row in self._entries:
            acc: Any = Fraction(0)
            for x, y in zip(row, vector, strict=True):
                if x and y:
                    acc = acc + x * y
            out.append(_normalize(acc))
        return tuple(out)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ValueError(f"Cannot hstack {self.shape} with {other.shape}")
        return ExactMatrix(
            [r1 + r2 for r1, r2 in zip(self._entries, other._entries, strict=True)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols:
            raise ValueError(f"Cannot vstack {self.shape} with {other.shape}")
        return ExactMatrix(self._entries + other._entries, cols=self.cols)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise ValueError("Trace of a non-square matrix")
        acc: Any = Fraction(0)
        for i in range(self.rows):
            acc = acc + self._entries[i][i]
        return _normalize(acc)

    # Elimination

    def _bareiss(self) -> tuple[list[list[Any]], list[int], int]:
        """Fraction-free forward elimination; returns (rows, pivot columns, swap sign)."""
        work = [list(row) for row in self._entries]
        pivots: list[int] = []
        sign = 1
        prev: Any = Fraction(1)
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            pivot_row = next((i for i in range(r, self.rows) if work[i][c]), None)
            if pivot_row is None:
                continue
            if pivot_row != r:
                work[r], work[pivot_row] = work[pivot_row], work[r]
                sign = -sign
            p = work[r][c]
            top = work[r]
            for i in range(r + 1, self.rows):
                row = work[i]
                m = row[c]
                if m:
                    for j in range(c + 1, self.cols):
                        row[j] = (p * row[j] - m * top[j]) / prev
                else:
                    for j in range(c + 1, self.cols):
                        if row[j]:
                            row[j] = p * row[j] / prev
                row[c] = m * 0
            prev = p
            pivots.append(c)
            r += 1
        return work, pivots, sign

    def echelon_form(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Row echelon form (fraction-free) and pivot columns."""
        work, pivots, _ = self._bareiss()
        return ExactMatrix(work, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        """Exact rank."""
        if self.rows == 0 or self.cols == 0:
            return 0
        _, pivots, _ = self._bareiss()
        return len(pivots)

    def determinant(self) -> Scalar:
        """Determinant via Bareiss: the last pivot equals det up to row-swap sign."""
        if not self.is_square():
            raise ValueError("Determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        work, pivots, sign = self._bareiss()
        if len(pivots) < self.rows:
            return _normalize(self._entries[0][0] * 0)
        return _normalize(work[-1][-1] * sign)

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        work, pivots, _ = self._bareiss()
        for r, c in enumerate(pivots):
            p = work[r][c]
            work[r] = [x / p if x else x for x in work[r]]
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            for i in range(r):
                m = work[i][c]
                if m:
                    work[i] = [x - m * y for x, y in zip(work[i], work[r], strict=True)]
        return ExactMatrix(work, cols=self.cols), tuple(pivots)

    def kernel_basis(self) -> list[Vector]:
        """Basis of the right kernel, one vector per free column."""
        zero: Any = self._entries[0][0] * 0 if self.rows and self.cols else Fraction(0)
        one = zero + 1
        if self.rows == 0:
            return [tuple(one if j == k else zero for j in range(self.cols)) for k in range(self.cols)]
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis: list[Vector] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec: list[Any] = [zero] * self.cols
            vec[free] = one
            for r, c in enumerate(pivots):
                vec[c] = -reduced[r, free]
            basis.append(tuple(_normalize(x) for x in vec))
        return basis

    def solve(self, rhs: Sequence[Scalar]) -> Vector | None:
        """One exact solution of ``self @ x = rhs``, or None when inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError(f"Right-hand side of length {len(rhs)} does not match {self.rows} rows")
        augmented = self.hstack(ExactMatrix([[b] for b in rhs], cols=1))
        reduced, pivots = augmented.rref()
        if self.cols in pivots:
            return None
        zero: Any = self._entries[0][0] * 0 if self.rows and self.cols else Fraction(0)
        solution: list[Any] = [zero] * self.cols
        for r, c in enumerate(pivots):
            solution[c] = reduced[r, self.cols]
        return tuple(_normalize(x) for x in solution)

    def inverse(self) -> "ExactMatrix":
        """Inverse via reduction of [M | I]."""
        if not self.is_square():
            raise ValueError("Inverse of a non-square matrix")
        one: Any = self._entries[0][0] * 0 + 1 if self.rows else Fraction(1)
        reduced, pivots = self.hstack(ExactMatrix.identity(self.rows, one)).rref()
        if pivots[: self.rows] != tuple(range(self.rows)):
            raise ValueError("Matrix is singular")
        return ExactMatrix([row[self.cols :] for row in reduced.entries()], cols=self.cols)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def charpoly(self) -> list[Scalar]:
        """
        Characteristic polynomial coefficients [1, c1, ..., cn] of det(x I - M).

        Uses the Faddeev-LeVerrier recursion, exact in characteristic zero.
        """
        if not self.is_square():
            raise ValueError("Characteristic polynomial of a non-square matrix")
        n = self.rows
        one: Any = self._entries[0][0] * 0 + 1 if n else Fraction(1)
        coeffs: list[Any] = [one]
        m_k = ExactMatrix.zeros(n, n, one)
        identity = ExactMatrix.identity(n, one)
        for k in range(1, n + 1):
            m_k = self @ m_k + identity.scale(coeffs[-1])
            c_k = -(self @ m_k).trace() / k
            coeffs.append(c_k)
        return [_normalize(c) for c in coeffs]

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self._entries)
        return f"ExactMatrix[{self.rows}x{self.cols}]({body})"


def span_rank(vectors: Sequence[Sequence[Scalar]], dim: int) -> int:
    """Rank of the span of the given vectors in a space of dimension ``dim``."""
    if not vectors:
        return 0
    return ExactMatrix(vectors, cols=dim).rank()


def intersection_dimension(
    u: Sequence[Sequence[Scalar]], v: Sequence[Sequence[Scalar]], dim: int
) -> int:
    """dim(U ∩ V) = dim U + dim V - dim(U + V)."""
    return span_rank(u, dim) + span_rank(v, dim) - span_rank(list(u) + list(v), dim)


def contains_span(
    big: Sequence[Sequence[Scalar]], small: Sequence[Sequence[Scalar]], dim: int
) -> bool:
    """Check whether span(small) is contained in span(big)."""
    return span_rank(list(big) + list(small), dim) == span_rank(big, dim)
