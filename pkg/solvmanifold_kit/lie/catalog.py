"""
Catalog of the twelve unimodular non-nilpotent solvable Lie algebras s1..s12.

``raw_algebra`` evaluates the structure equations for any parameter values;
``catalog`` additionally enforces the canonical parameter ranges.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..geometry.forms import Form
from ..utilities.constants import CATALOG_SIZE, ValidationError
from .algebra import RealLieAlgebra

# number of parameters per catalog index
PARAMETER_COUNT: dict[int, int] = {5: 1, 6: 2, 7: 1, 8: 1, 10: 2, 11: 1}


@dataclass(frozen=True)
class CatalogLabel:
    """Catalog entry s_index with up to two rational parameters (alpha, beta)."""

    index: int
    alpha: Fraction | None = None
    beta: Fraction | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.index <= CATALOG_SIZE:
            raise ValidationError(f"Catalog index must be in 1..{CATALOG_SIZE}, got: {self.index}")
        expected = PARAMETER_COUNT.get(self.index, 0)
        given = sum(p is not None for p in (self.alpha, self.beta))
        if given != expected or (expected == 1 and self.alpha is None):
            raise ValidationError(f"s{self.index} takes {expected} parameter(s), got {given}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def params(self) -> tuple[Fraction, ...]:
        return tuple(p for p in (self.alpha, self.beta) if p is not None)

    def in_range(self) -> bool:
        """Check the canonical parameter ranges."""
        a, b = self.alpha, self.beta
        match self.index:
            case 5 | 8:
                return a is not None and a > 0
            case 6:
                return a is not None and b is not None and a > 0 and 0 < b < 1
            case 7:
                return a is not None and 0 < a <= 1
            case 10:
                return a is not None and a != 0
            case 11:
                return a is not None and 0 < a < 1
            case _:
                return True

    def __str__(self) -> str:
        if not self.params:
            return f"s{self.index}"
        return f"s{self.index}^{{{','.join(str(p) for p in self.params)}}}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "label": str(self),
            "params": [str(p) for p in self.params],
        }


def _form(*terms: tuple[Any, int, int]) -> Form:
    """Real 2-form from (coefficient, i, j) triples with 1-based indices."""
    return Form({(i - 1, j - 1): c for c, i, j in terms if c})


def raw_algebra(label: CatalogLabel) -> RealLieAlgebra:
    """Structure equations of s_k for arbitrary parameter values."""
    a = label.alpha if label.alpha is not None else Fraction(0)
    b = label.beta if label.beta is not None else Fraction(0)
    zero = Form.zero()
    match label.index:
        case 1:
            eqs = [_form((1, 2, 3)), _form((1, 3, 4)), _form((-1, 2, 4)), zero, zero, zero]
        case 2:
            eqs = [zero, _form((-1, 1, 3)), _form((1, 1, 2)), zero, zero, zero]
        case 3:
            eqs = [zero, _form((-1, 1, 3)), _form((1, 1, 2)), zero, _form((-1, 4, 6)), _form((1, 4, 5))]
        case 4:
            eqs = [_form((1, 1, 5)), _form((-1, 2, 5)), _form((-1, 3, 5)), _form((1, 4, 5)), zero, zero]
        case 5:
            eqs = [
                _form((1, 1, 5)),
                _form((1, 2, 5)),
                _form((-1, 3, 5), (a, 4, 5)),
                _form((-a, 3, 5), (-1, 4, 5)),
                zero,
                zero,
            ]
        case 6:
            eqs = [
                _form((a, 1, 5), (1, 2, 5)),
                _form((-1, 1, 5), (a, 2, 5)),
                _form((-a, 3, 5), (b, 4, 5)),
                _form((-b, 3, 5), (-a, 4, 5)),
                zero,
                zero,
            ]
        case 7:
            eqs = [_form((1, 2, 5)), _form((-1, 1, 5)), _form((a, 4, 5)), _form((-a, 3, 5)), zero, zero]
        case 8:
            eqs = [
                _form((a, 1, 5), (1, 2, 5)),
                _form((-1, 1, 5), (a, 2, 5)),
                _form((-a, 3, 5), (1, 4, 5)),
                _form((-1, 3, 5), (-a, 4, 5)),
                zero,
                zero,
            ]
        case 9:
            eqs = [
                _form((-1, 1, 6)),
                _form((-1, 2, 6)),
                _form((1, 3, 6), (-1, 4, 5)),
                _form((1, 3, 5), (1, 4, 6)),
                zero,
                zero,
            ]
        case 10:
            eqs = [
                _form((1, 1, 5), (b, 1, 6), (-1, 2, 6)),
                _form((1, 1, 6), (1, 2, 5), (b, 2, 6)),
                _form((-1, 3, 5), (-b, 3, 6), (-a, 4, 5)),
                _form((a, 3, 5), (-1, 4, 5), (-b, 4, 6)),
                zero,
                zero,
            ]
        case 11:
            eqs = [
                _form((1, 1, 6), (-1, 2, 5)),
                _form((1, 1, 5), (1, 2, 6)),
                _form((-1, 3, 6), (-a, 4, 5)),
                _form((a, 3, 5), (-1, 4, 6)),
                zero,
                zero,
            ]
        case 12:
            eqs = [
                _form((1, 1, 6), (-1, 2, 5)),
                _form((1, 1, 5), (1, 2, 6)),
                _form((-1, 3, 6), (1, 4, 5)),
                _form((-1, 3, 5), (-1, 4, 6)),
                zero,
                zero,
            ]
        case _:
            raise ValidationError(f"Unknown catalog index: {label.index}")
    return RealLieAlgebra(eqs, name=str(label))


def catalog(label: CatalogLabel) -> RealLieAlgebra:
    """Structure equations of s_k; parameters must lie in the canonical ranges."""
    if not label.in_range():
        raise ValidationError(f"Parameters of {label} are outside the canonical range")
    return raw_algebra(label)


def label(index: int, alpha: Any = None, beta: Any = None) -> CatalogLabel:
    """Convenience constructor accepting ints, Fractions or ``p/q`` text."""
    return CatalogLabel(
        index,
        None if alpha is None else Fraction(alpha),
        None if beta is None else Fraction(beta),
    )


def all_labels_with_samples() -> list[CatalogLabel]:
    """One in-range representative per catalog entry."""
    half = Fraction(1, 2)
    return [
        label(1),
        label(2),
        label(3),
        label(4),
        label(5, 2),
        label(6, 1, half),
        label(7, half),
        label(8, 1),
        label(9),
        label(10, 1, 1),
        label(11, half),
        label(12),
    ]
