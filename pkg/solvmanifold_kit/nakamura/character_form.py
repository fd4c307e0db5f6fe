"""
Forms on C x C^2 with exponential coefficients in z3.

A monomial is coeff * exp(a z3 + b conj(z3)) * theta^K where theta^0..2 are
dz1, dz2, dz3 + t d(conj z3) and theta^3..5 their conjugates. All theta are
closed, so d acts on the exponential alone:

    d exp(f) = exp(f) [(a - b conj(t)) theta^2 + (b - a t) theta^5] / (1 - |t|^2)
"""

from collections.abc import Iterator, Mapping
from typing import Any

from ..domain.gaussian import ONE, ZERO, GaussianRational
from ..geometry.forms import Key, sort_with_sign, wedge_keys
from .characters import Character

FRAME_SIZE = 3

# (exponent, covector key)
MonomialKey = tuple[Character, Key]


class CharacterForm:
    """Immutable sum of exponential monomials; equal (exponent, key) pairs are merged."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[MonomialKey, Any] | None = None) -> None:
        merged: dict[MonomialKey, GaussianRational] = {}
        for (exponent, key), coeff in (terms or {}).items():
            sign, sorted_key = sort_with_sign(key)
            if not sign:
                continue
            value = GaussianRational.coerce(coeff) * sign
            merged[(exponent, sorted_key)] = merged.get((exponent, sorted_key), ZERO) + value
        self._terms = {k: v for k, v in merged.items() if v}

    @classmethod
    def factor(cls, exponent: Character, covector: int) -> "CharacterForm":
        """exp(exponent) * theta^covector."""
        return cls({(exponent, (covector,)): ONE})

    @classmethod
    def constant(cls, value: Any = 1) -> "CharacterForm":
        return cls({(Character(), ()): value})

    def items(self) -> Iterator[tuple[MonomialKey, GaussianRational]]:
        return iter(sorted(self._terms.items(), key=lambda item: _sort_key(item[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "CharacterForm") -> "CharacterForm":
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return CharacterForm(terms)

    def scale(self, factor: Any) -> "CharacterForm":
        g = GaussianRational.coerce(factor)
        return CharacterForm({key: coeff * g for key, coeff in self._terms.items()})

    def wedge(self, other: "CharacterForm") -> "CharacterForm":
        terms: dict[MonomialKey, GaussianRational] = {}
        for (e1, k1), c1 in self._terms.items():
            for (e2, k2), c2 in other._terms.items():
                sign, key = wedge_keys(k1, k2)
                if sign:
                    mono = (e1 * e2, key)
                    terms[mono] = terms.get(mono, ZERO) + c1 * c2 * sign
        return CharacterForm(terms)

    def conjugate(self) -> "CharacterForm":
        terms: dict[MonomialKey, GaussianRational] = {}
        for (exponent, key), coeff in self._terms.items():
            sign, image = sort_with_sign(
                [i + FRAME_SIZE if i < FRAME_SIZE else i - FRAME_SIZE for i in key]
            )
            terms[(exponent.conjugate(), image)] = coeff.conjugate() * sign
        return CharacterForm(terms)

    def d(self, t: GaussianRational = ZERO) -> "CharacterForm":
        """Exterior derivative in the frame deformed by t."""
        scale = 1 / (1 - t.norm())
        result = CharacterForm()
        for (exponent, key), coeff in self._terms.items():
            if exponent.is_trivial:
                continue
            a, b = exponent.a, exponent.b
            differential = CharacterForm(
                {
                    (exponent, (2,)): (a - b * t.conjugate()) * scale,
                    (exponent, (5,)): (b - a * t) * scale,
                }
            )
            result = result + differential.wedge(CharacterForm({(Character(), key): coeff}))
        return result

    def bidegrees(self) -> set[tuple[int, int]]:
        return {bidegree_of_key(key) for (_, key) in self._terms}

    def __repr__(self) -> str:
        parts = [f"{c}*{e}*theta{list(k)}" for (e, k), c in self.items()]
        return "CharacterForm(" + " + ".join(parts) + ")"


def bidegree_of_key(key: Key) -> tuple[int, int]:
    p = sum(1 for i in key if i < FRAME_SIZE)
    return p, len(key) - p


def _sort_key(mono: MonomialKey) -> tuple[Any, ...]:
    exponent, key = mono
    return (key, str(exponent.a), str(exponent.b))
