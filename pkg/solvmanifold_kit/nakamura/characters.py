"""
Characters of C and their restrictions to the lattice Γ'_C.

A character is exp(a z3 + b conj(z3)) with a, b in Q(i). The lattice of C
compatible with the splitting is generated by

    w1 = π (1 - i Re C) / (2 Im C)     and     w2 = (i/2) L,   L = log((3 + √5)/2),

so the value of a character at a generator is an element of the Q(i)-span of
iπ and iL, kept symbolically. Triviality assumes π and L are linearly
independent over Q.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Final

from ..domain.gaussian import I_UNIT, ZERO, GaussianRational, ScalarInput
from ..utilities.constants import ValidationError

logger = logging.getLogger(__name__)

LOG_SYMBOL: Final[str] = "L"
LOG_DEFINITION: Final[str] = "L = log((3+sqrt(5))/2)"


class LatticeClass(Enum):
    """Classes of C distinguished by which characters trivialize on Γ'_C."""

    ODD = "i/(2k+1)"
    EVEN = "i/(2k)"
    GENERIC = "C != i/k"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SymbolicExponent:
    """The number i(pi * π + log * L) with Gaussian-rational coefficients."""

    pi: GaussianRational = ZERO
    log: GaussianRational = ZERO

    def __add__(self, other: "SymbolicExponent") -> "SymbolicExponent":
        return SymbolicExponent(self.pi + other.pi, self.log + other.log)

    @property
    def is_trivial(self) -> bool:
        """exp of this exponent is 1: no L part and an even real multiple of iπ."""
        if self.log or not self.pi.is_real():
            return False
        value = self.pi.re
        return value.denominator == 1 and value.numerator % 2 == 0

    def __str__(self) -> str:
        return f"i*(({self.pi})*pi + ({self.log})*{LOG_SYMBOL})"


@dataclass(frozen=True)
class Character:
    """exp(a z3 + b conj(z3))."""

    a: GaussianRational = ZERO
    b: GaussianRational = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", GaussianRational.coerce(self.a))
        object.__setattr__(self, "b", GaussianRational.coerce(self.b))

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.a + other.a, self.b + other.b)

    def inverse(self) -> "Character":
        return Character(-self.a, -self.b)

    def power(self, k: int) -> "Character":
        return Character(self.a * k, self.b * k)

    def conjugate(self) -> "Character":
        """exp(conj(a) conj(z3) + conj(b) z3)."""
        return Character(self.b.conjugate(), self.a.conjugate())

    @property
    def is_unitary(self) -> bool:
        return self.b == -self.a.conjugate()

    @property
    def is_holomorphic(self) -> bool:
        return not self.b

    @property
    def is_trivial(self) -> bool:
        return not self.a and not self.b

    def __str__(self) -> str:
        return f"exp(({self.a})*z3 + ({self.b})*conj(z3))"

    def to_dict(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b)}


def require_c(C: ScalarInput) -> GaussianRational:
    c = GaussianRational.coerce(C)
    if c.im == 0:
        raise ValidationError(f"Im C must be nonzero, got: {c}")
    return c


def characters(C: ScalarInput) -> dict[str, Character]:
    """The six characters alpha_1, alpha_2, beta_1, beta_2, gamma_1, gamma_2 of J_C."""
    c = require_c(C)
    minus = c - I_UNIT
    plus = c + I_UNIT
    alpha1 = Character(-minus, -plus)
    beta1 = Character(c.conjugate() - I_UNIT, -plus)
    gamma1 = Character(minus, -(c.conjugate() + I_UNIT))
    return {
        "alpha1": alpha1,
        "alpha2": alpha1.inverse(),
        "beta1": beta1,
        "beta2": beta1.inverse(),
        "gamma1": gamma1,
        "gamma2": gamma1.inverse(),
    }


def lattice_exponents(ch: Character, C: ScalarInput) -> tuple[SymbolicExponent, SymbolicExponent]:
    """Values a*w + b*conj(w) at the two generators of Γ'_C."""
    c = require_c(C)
    c1 = GaussianRational(1, -c.re) / (2 * c.im)
    at_w1 = (ch.a * c1 + ch.b * c1.conjugate()) * GaussianRational(0, -1)
    at_w2 = (ch.a - ch.b) / 2
    return SymbolicExponent(pi=at_w1), SymbolicExponent(log=at_w2)


def char_restriction_trivial(ch: Character, C: ScalarInput) -> bool:
    """True iff the character is identically 1 on Γ'_C."""
    exponents = lattice_exponents(ch, C)
    result = all(e.is_trivial for e in exponents)
    logger.debug(f"{ch} on lattice of C={C}: {[str(e) for e in exponents]} -> {result}")
    return result


def i_over_k(C: ScalarInput) -> int | None:
    """k when C = i/k for a nonzero integer k, else None."""
    c = GaussianRational.coerce(C)
    if c.re != 0 or c.im == 0:
        return None
    inverse = 1 / c.im
    return inverse.numerator if inverse.denominator == 1 else None


def lattice_class(C: ScalarInput) -> LatticeClass:
    k = i_over_k(require_c(C))
    if k is None:
        return LatticeClass.GENERIC
    return LatticeClass.ODD if k % 2 else LatticeClass.EVEN


def odd_class_c(k: int) -> GaussianRational:
    """C_k = i/(2k+1)."""
    return GaussianRational(0, Fraction(1, 2 * k + 1))


@dataclass(frozen=True)
class NakamuraParams:
    """C with Im C != 0 and a deformation parameter t with |t| < 1."""

    C: GaussianRational
    t: GaussianRational = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "C", require_c(self.C))
        t = GaussianRational.coerce(self.t)
        object.__setattr__(self, "t", t)
        if t.norm() >= 1:
            raise ValidationError(f"Deformation parameter needs |t| < 1, got: {t}")
        if t and lattice_class(self.C) != LatticeClass.ODD:
            raise ValidationError(f"Deformations are defined for C = i/(2k+1), got: {self.C}")

    @classmethod
    def of(cls, C: ScalarInput, t: ScalarInput = 0) -> "NakamuraParams":
        return cls(GaussianRational.coerce(C), GaussianRational.coerce(t))

    def __str__(self) -> str:
        return f"C={self.C}, t={self.t}"

    def to_dict(self) -> dict[str, Any]:
        return {"C": str(self.C), "t": str(self.t), "class": str(lattice_class(self.C))}
