"""
Case invariants Delta, X and Y of the C2 splitting family.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..domain.gaussian import GaussianRational, ScalarInput
from ..utilities.constants import ValidationError


@dataclass(frozen=True)
class CaseInvariants:
    """Delta(A, B) always; X and Y only when Im A != Im B."""

    delta: Fraction
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def has_xy(self) -> bool:
        return self.x is not None

    def require_xy(self) -> tuple[Fraction, Fraction]:
        if self.x is None or self.y is None:
            raise ValidationError("X and Y are undefined when Im A = Im B")
        return self.x, self.y

    def to_dict(self) -> dict[str, Any]:
        return {
            "delta": str(self.delta),
            "X": None if self.x is None else str(self.x),
            "Y": None if self.y is None else str(self.y),
        }


def delta(A: GaussianRational, B: GaussianRational) -> Fraction:
    """(Im A - Im B)^2 + (2 + Re A + Re B)(Re A + Re B)."""
    s = A.re + B.re
    return (A.im - B.im) ** 2 + (2 + s) * s


def x_invariant(A: GaussianRational, B: GaussianRational) -> Fraction:
    """(|A|^2 - |B|^2) / (Im A - Im B)."""
    if A.im == B.im:
        raise ValidationError(f"X is undefined for Im A = Im B (A={A}, B={B})")
    return (A.norm() - B.norm()) / (A.im - B.im)


def y_invariant(A: GaussianRational, B: GaussianRational) -> Fraction:
    """2 (Im A (1 + Re B) + Im B (1 + Re A)) / (Im A - Im B)."""
    if A.im == B.im:
        raise ValidationError(f"Y is undefined for Im A = Im B (A={A}, B={B})")
    return 2 * (A.im * (1 + B.re) + B.im * (1 + A.re)) / (A.im - B.im)


def case_invariants(A: ScalarInput, B: ScalarInput, strict: bool = False) -> CaseInvariants:
    """
    Compute Delta, and X, Y when defined.

    With ``strict`` a ValidationError is raised instead of leaving X, Y unset.
    """
    a, b = GaussianRational.coerce(A), GaussianRational.coerce(B)
    if a.im == b.im:
        if strict:
            raise ValidationError(f"X and Y are undefined for Im A = Im B (A={a}, B={b})")
        return CaseInvariants(delta(a, b))
    return CaseInvariants(delta(a, b), x_invariant(a, b), y_invariant(a, b))
