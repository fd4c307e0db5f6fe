"""
Invariant Hermitian structures in a (1,0)-coframe of complex dimension 3.

A metric is recorded by the real diagonal coefficients r^2, s^2, t^2 and the
complex off-diagonal coefficients u, v, z of

    2F = i r^2 w11~ + i s^2 w22~ + i t^2 w33~ + u w12~ - conj(u) w21~
         + v w23~ - conj(v) w32~ + z w13~ - conj(z) w31~
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any

from ..domain.gaussian import I_UNIT, ZERO, GaussianRational, ScalarInput, to_rational
from ..geometry.forms import Form, complex_monomial
from ..utilities.constants import COMPLEX_DIMENSION, ValidationError


@dataclass(frozen=True)
class HermitianMetric:
    """Coefficients (r2, s2, t2, u, v, z) of an invariant Hermitian structure."""

    r2: Fraction = Fraction(1)
    s2: Fraction = Fraction(1)
    t2: Fraction = Fraction(1)
    u: GaussianRational = ZERO
    v: GaussianRational = ZERO
    z: GaussianRational = ZERO

    def __post_init__(self) -> None:
        for name in ("r2", "s2", "t2"):
            value = getattr(self, name)
            if isinstance(value, GaussianRational):
                if not value.is_real():
                    raise ValidationError(f"{name} must be real, got: {value}")
                value = value.re
            value = to_rational(value)
            if value <= 0:
                raise ValidationError(f"{name} must be positive, got: {value}")
            object.__setattr__(self, name, value)
        for name in ("u", "v", "z"):
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))

    @classmethod
    def identity(cls) -> "HermitianMetric":
        return cls()

    @classmethod
    def normalized(
        cls,
        t2: ScalarInput = 1,
        u: ScalarInput = 0,
        v: ScalarInput = 0,
        z: ScalarInput = 0,
    ) -> "HermitianMetric":
        """The tuple (t^2, u, v, z) with r = s = 1."""
        return cls(
            Fraction(1),
            Fraction(1),
            _real(t2, "t2"),
            GaussianRational.coerce(u),
            GaussianRational.coerce(v),
            GaussianRational.coerce(z),
        )

    def with_coefficients(self, **changes: Any) -> "HermitianMetric":
        return replace(self, **changes)

    @property
    def is_diagonal(self) -> bool:
        return not (self.u or self.v or self.z)

    def __str__(self) -> str:
        if self.r2 == 1 and self.s2 == 1:
            return f"F(t2={self.t2}, u={self.u}, v={self.v}, z={self.z})"
        return (
            f"F(r2={self.r2}, s2={self.s2}, t2={self.t2}, u={self.u}, v={self.v}, z={self.z})"
        )

    def to_dict(self) -> dict[str, str]:
        return {
            "r2": str(self.r2),
            "s2": str(self.s2),
            "t2": str(self.t2),
            "u": str(self.u),
            "v": str(self.v),
            "z": str(self.z),
        }


def _real(value: ScalarInput, name: str) -> Fraction:
    g = GaussianRational.coerce(value)
    if not g.is_real():
        raise ValidationError(f"{name} must be real, got: {g}")
    return g.re


def fundamental_form(m: HermitianMetric, n: int = COMPLEX_DIMENSION) -> Form:
    """The (1,1)-form F itself (half of the displayed 2F)."""
    if n != COMPLEX_DIMENSION:
        raise ValidationError(f"Hermitian metrics are recorded in complex dimension 3, got: {n}")
    half = Fraction(1, 2)
    terms = [
        ((1,), (1,), I_UNIT * m.r2),
        ((2,), (2,), I_UNIT * m.s2),
        ((3,), (3,), I_UNIT * m.t2),
        ((1,), (2,), m.u),
        ((2,), (1,), -m.u.conjugate()),
        ((2,), (3,), m.v),
        ((3,), (2,), -m.v.conjugate()),
        ((1,), (3,), m.z),
        ((3,), (1,), -m.z.conjugate()),
    ]
    form = Form.zero()
    for holo, anti, coeff in terms:
        if coeff:
            form = form + complex_monomial(holo, anti, n, coeff * half)
    return form


def positivity_margins(m: HermitianMetric) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Left minus right side of each positivity inequality; all must be positive."""
    mixed = (I_UNIT * m.u.conjugate() * m.v.conjugate() * m.z).re
    return (
        m.r2 * m.s2 - m.u.norm(),
        m.s2 * m.t2 - m.v.norm(),
        m.r2 * m.t2 - m.z.norm(),
        m.r2 * m.s2 * m.t2
        + 2 * mixed
        - (m.t2 * m.u.norm() + m.r2 * m.v.norm() + m.s2 * m.z.norm()),
    )


def is_positive(m: HermitianMetric) -> bool:
    """Positive-definiteness of F, decided exactly."""
    return all(margin > 0 for margin in positivity_margins(m))
