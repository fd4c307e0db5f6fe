"""
Real quadratic field elements a + b*sqrt(d).

The radicand need not be squarefree; elements are canonical by the pair (a, b)
for a fixed non-square d.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ..utilities.constants import ParseError, ValidationError
from .gaussian import to_rational

_SQRT_RE = re.compile(r"sqrt\((\d+)\)")


def is_perfect_square(n: int) -> bool:
    """Check whether a non-negative integer is a perfect square."""
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True, init=False, eq=False)
class QuadraticScalar:
    """Immutable element of Q(sqrt(d)) for a positive non-square d."""

    d: int
    a: Fraction
    b: Fraction

    def __init__(self, d: int, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        """Create a + b*sqrt(d), validating the radicand."""
        if not isinstance(d, int) or d <= 0 or is_perfect_square(d):
            raise ValidationError(f"Radicand must be a positive non-square integer, got: {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", to_rational(a))
        object.__setattr__(self, "b", to_rational(b))

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticScalar":
        """The element sqrt(d)."""
        return cls(d, 0, 1)

    @classmethod
    def from_string(cls, text: str) -> "QuadraticScalar":
        """Parse ``p/q+r/s*sqrt(D)``; text without a radical is rejected (no field)."""
        compact = "".join(text.split())
        match = _SQRT_RE.search(compact)
        if match is None or match.end() != len(compact):
            raise ParseError(f"Expected a term ending in sqrt(D): {text!r}")
        d = int(match.group(1))
        prefix = compact[: match.start()].removesuffix("*")
        split_at = max(prefix.rfind("+"), prefix.rfind("-"))
        if split_at > 0:
            a_text, b_text = prefix[:split_at], prefix[split_at:]
        else:
            a_text, b_text = "0", prefix
        if b_text in ("", "+"):
            b_text = "1"
        elif b_text == "-":
            b_text = "-1"
        try:
            return cls(d, Fraction(a_text), Fraction(b_text))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid quadratic scalar: {text!r}") from e

    def conjugate(self) -> "QuadraticScalar":
        """Galois conjugate a - b*sqrt(d)."""
        return QuadraticScalar(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        """Field trace 2a."""
        return 2 * self.a

    def inverse(self) -> "QuadraticScalar":
        """Multiplicative inverse (norm is nonzero because d is not a square)."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Inverse of zero in Q(sqrt(d))")
        return QuadraticScalar(self.d, self.a / n, -self.b / n)

    def is_rational(self) -> bool:
        """Check whether the sqrt(d) part vanishes."""
        return self.b == 0

    def _lift(self, other: object) -> "QuadraticScalar | None":
        if isinstance(other, QuadraticScalar):
            if other.d != self.d:
                raise ValueError(f"Mixed radicands {self.d} and {other.d}")
            return other
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return QuadraticScalar(self.d, other)
        return None

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, int | Fraction):
            return self.b == 0 and self.a == other
        return False

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.d, self.a, self.b))

    def __neg__(self) -> "QuadraticScalar":
        return QuadraticScalar(self.d, -self.a, -self.b)

    def __add__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.d, o.a - self.a, o.b - self.b)

    def __mul__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(
            self.d, self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadraticScalar":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadraticScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadraticScalar(self.d, 1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        """Render in the ``p/q+r/s*sqrt(D)`` grammar."""
        radical = f"sqrt({self.d})"
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            b_text = radical
        elif self.b == -1:
            b_text = f"-{radical}"
        else:
            b_text = f"{self.b}*{radical}"
        if self.a == 0:
            return b_text
        joiner = "" if b_text.startswith("-") else "+"
        return f"{self.a}{joiner}{b_text}"

    def __repr__(self) -> str:
        return f"QuadraticScalar('{self}')"
