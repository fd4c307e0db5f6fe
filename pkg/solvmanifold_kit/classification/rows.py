"""
Decision tree of the splitting-type classification.

Each row yields the raw catalog label (parameters possibly outside the
canonical range) and the real-basis dictionary of its table: alpha^1..alpha^4
as signed catalog covectors, ``(3, -2, ...)`` meaning alpha^1 = e^3,
alpha^2 = -e^2, and so on. The omega^3 part is recovered by solving.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..domain.gaussian import GaussianRational
from ..geometry.coframe import SplittingParams
from ..lie.catalog import CatalogLabel, label
from ..utilities.constants import DegenerateStructureError, Family
from .invariants import delta, x_invariant, y_invariant

Dictionary = tuple[int, int, int, int]

IDENTITY_DICTIONARY: Dictionary = (1, 2, 3, 4)
SWAPPED_DICTIONARY: Dictionary = (3, 4, 1, 2)


@dataclass(frozen=True)
class RowMatch:
    """The table row that fired."""

    table: str
    row: str
    raw_label: CatalogLabel
    dictionary: Dictionary | None = None
    scales: tuple[int, int, int, int] = (1, 1, 1, 1)

    @property
    def provenance(self) -> str:
        return f"{self.table}: {self.row}"


def _sign(value: Fraction) -> int:
    return 1 if value > 0 else -1


def match_row(params: SplittingParams) -> RowMatch:
    """Fire exactly one table row for the given parameters."""
    if params.family == Family.KT:
        if params.eps == 0:
            raise DegenerateStructureError("KT family with eps=0 is nilpotent (0,0,0,0,0,e^{12})")
        return RowMatch("KT family", "eps=1", label(1), (3, -2, 5, -1), (1, 1, 2, 2))
    if params.eps == 0:
        return _eps_zero(params.A, params.B)
    if params.A.im == params.B.im:
        if params.A.im == 0:
            return _real_parameters(params.A.re, params.B.re)
        return _equal_imaginary(params.A, params.B)
    if delta(params.A, params.B) == 0:
        return _dependent(params.A, params.B)
    return _independent(params.A, params.B)


def _eps_zero(A: GaussianRational, B: GaussianRational) -> RowMatch:
    table = "eps=0"
    if B == -A.conjugate():
        if not A:
            raise DegenerateStructureError("A = B = 0 with eps = 0 is the trivial product action")
        return RowMatch(table, "A = -conj(B) != 0", label(2), (3, 2, 4, 5))
    # rescaling omega^3 by -(A + conj B) gives A' + conj(B') = -1
    b = -B / (A.conjugate() + B)
    if b.im != 0:
        alpha = 2 * b.im
        beta = (1 + 2 * b.re) / (2 * b.im)
        return RowMatch(table, "A = -1 - conj(B), Im B != 0", label(10, alpha, beta), SWAPPED_DICTIONARY)
    if b.re == -1:
        return RowMatch(table, "A = -1 - conj(B), B = -1", label(12), (4, 3, -1, -2))
    if b.re == Fraction(-1, 2):
        return RowMatch(table, "A = -1 - conj(B), B = -1/2", label(9), IDENTITY_DICTIONARY)
    if b.re == 0:
        return RowMatch(table, "A = -1 - conj(B), B = 0", label(12), SWAPPED_DICTIONARY)
    return RowMatch(
        table, "A = -1 - conj(B), B real, B != -1, -1/2, 0", label(11, -1 - 2 * b.re), SWAPPED_DICTIONARY
    )


def _real_parameters(a: Fraction, b: Fraction) -> RowMatch:
    table = "eps=1, Im A = Im B = 0"
    if a == -b:
        if a == 0:
            return RowMatch(table, "A = -B = 0", label(2), (4, 5, 3, 2))
        return RowMatch(table, "A = -B != 0", label(7, abs(a)), (-3 * _sign(a), 4, 1, 2))
    if a == b:
        if a == -1:
            return RowMatch(table, "A = B = -1", label(4), (1, 4, 3, 2))
        return RowMatch(table, "A = B != 0, -1", label(9), IDENTITY_DICTIONARY)
    if a == -1:
        return RowMatch(table, "A != ±B, A = -1", label(12), (1, 2, 4, 3))
    if b == -1:
        return RowMatch(table, "A != ±B, B = -1", label(12), IDENTITY_DICTIONARY)
    if a + b == -2:
        return RowMatch(table, "A != ±B, A + B = -2", label(9), SWAPPED_DICTIONARY)
    return RowMatch(
        table, "A != ±B, A + B != -2, A, B != -1", label(11, (2 + a + b) / (b - a)), IDENTITY_DICTIONARY
    )


def _equal_imaginary(A: GaussianRational, B: GaussianRational) -> RowMatch:
    table = "eps=1, Im A = Im B != 0"
    ra, rb, im = A.re, B.re, A.im
    if ra == -rb:
        return RowMatch(table, "Re A = -Re B", label(3), (2, -3, 5, 6))
    if ra == rb == -1:
        return RowMatch(table, "Re A = Re B = -1", label(5, abs(im)), (-3 * _sign(im), 4, 1, 2))
    if ra == rb:
        return RowMatch(table, "Re A = Re B != 0, -1", label(10, -im / ra, 0), SWAPPED_DICTIONARY)
    if ra + rb == -2:
        return RowMatch(table, "Re A != ±Re B, Re A + Re B = -2", label(9), SWAPPED_DICTIONARY)
    alpha = 2 * im * (2 + ra + rb) / (ra**2 - rb**2)
    beta = (ra + rb) / (2 * im)
    return RowMatch(
        table, "Re A != ±Re B, Re A + Re B != -2", label(10, alpha, beta), IDENTITY_DICTIONARY
    )


def _dependent(A: GaussianRational, B: GaussianRational) -> RowMatch:
    table = "eps=1, Im A != Im B, Delta = 0"
    d_im = A.im - B.im
    if A.norm() != B.norm():
        return RowMatch(
            table, "|A| != |B|", label(10, (2 + A.re + B.re) / d_im, 0), IDENTITY_DICTIONARY
        )
    if B == A.conjugate():
        return RowMatch(table, "|A| = |B|, B = conj(A)", label(5, -(1 + A.re) / A.im), IDENTITY_DICTIONARY)
    if B == -1:
        return RowMatch(table, "|A| = |B|, B = -1", label(8, A.im / (1 + A.re)), (1, 2, 4, 3))
    if A == -1:
        return RowMatch(table, "|A| = |B|, A = -1", label(8, B.im / (1 + B.re)), IDENTITY_DICTIONARY)
    alpha = d_im / (A.re - B.re)
    beta = -(2 + A.re + B.re) / (A.re - B.re)
    return RowMatch(table, "|A| = |B|, Re A != Re B", label(6, alpha, beta), IDENTITY_DICTIONARY)


def _independent(A: GaussianRational, B: GaussianRational) -> RowMatch:
    table = "eps=1, Im A != Im B, Delta != 0"
    d = delta(A, B)
    d_im = A.im - B.im
    x, y = x_invariant(A, B), y_invariant(A, B)
    if A.norm() == B.norm():
        if y == 0:
            return RowMatch(table, "|A| = |B|, Y = 0", label(9), IDENTITY_DICTIONARY)
        return RowMatch(table, "|A| = |B|, Y != 0", label(10, -y * d_im / d, 0), (3, 4, 1, -2))
    if y == 0:
        norm_gap = A.norm() - B.norm()
        if d in (norm_gap, -norm_gap):
            # the row is exactly B = -1 or A = -1
            dictionary = IDENTITY_DICTIONARY if B == -1 else (1, 2, 3, -4)
            return RowMatch(table, "|A| != |B|, Y = 0, Delta = ±(|A|^2 - |B|^2)", label(12), dictionary)
        return RowMatch(
            table, "|A| != |B|, Y = 0, Delta != ±(|A|^2 - |B|^2)", label(11, x * d_im / d), (3, 4, 1, -2)
        )
    return RowMatch(table, "|A| != |B|, Y != 0", label(10, y / x, d / (y * d_im)), IDENTITY_DICTIONARY)
