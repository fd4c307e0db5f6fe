"""
Gaussian rational value object.

Exact elements of Q(i) with the text grammar used on the command line and in
JSON output (``p/q``, ``p/q+r/s*i``, ``i/2``, ``(1+i)/4``).
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..utilities.constants import ParseError

Rational = Fraction

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(i)|([-+*/()]))")


def to_rational(value: int | str | Fraction) -> Fraction:
    """Coerce int, Fraction or ``p/q`` text into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid rational: {value!r}") from e
    raise TypeError(f"Expected int, str or Fraction, got: {type(value)}")


@dataclass(frozen=True, init=False, eq=False)
class GaussianRational:
    """
    Immutable element re + im*i of Q(i).

    Compares equal to ints and Fractions when the imaginary part vanishes, and
    hashes consistently with them.
    """

    re: Fraction
    im: Fraction

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0) -> None:
        """Create from real and imaginary parts."""
        object.__setattr__(self, "re", to_rational(re))
        object.__setattr__(self, "im", to_rational(im))

    @classmethod
    def coerce(cls, value: "ScalarInput") -> "GaussianRational":
        """Lift an int, Fraction or GaussianRational into Q(i)."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return cls.from_string(value)
        return cls(value)

    @classmethod
    def from_string(cls, text: str) -> "GaussianRational":
        """Parse the scalar grammar, e.g. ``-1/2+3*i``, ``2i/3`` or ``(1+i)/4``."""
        return _ScalarParser(text).parse()

    @classmethod
    def unit(cls) -> "GaussianRational":
        """The imaginary unit."""
        return cls(0, 1)

    def is_real(self) -> bool:
        """Check whether the imaginary part vanishes."""
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        """Complex conjugate."""
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus |z|^2."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        """Multiplicative inverse."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other: object) -> bool:
        """Equality with GaussianRational, int or Fraction."""
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int | Fraction):
            return self.im == 0 and self.re == other
        return False

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: object) -> "GaussianRational":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return GaussianRational(self.re * other, self.im * other)
        o = _lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("Division by zero in Q(i)")
            return GaussianRational(self.re / other, self.im / other)
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GaussianRational":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        """Render in the ``p/q+r/s*i`` grammar."""
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_text(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_text(abs(self.im))}"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"


ScalarInput = Union[int, Fraction, GaussianRational, str]


def _imag_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def _lift(value: object) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int | Fraction) and not isinstance(value, bool):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


class _ScalarParser:
    """Recursive-descent parser for the complex scalar grammar."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        tokens: list[str] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            match = _TOKEN_RE.match(stripped, pos)
            if match is None:
                raise ParseError(f"Unexpected character in scalar {text!r} at {pos}")
            tokens.append(match.group(match.lastindex or 0))
            pos = match.end()
        if not tokens:
            raise ParseError("Empty scalar")
        return tokens

    def parse(self) -> GaussianRational:
        value = self._expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"Trailing input in scalar {self.text!r}")
        return value

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> str:
        token = self._peek()
        if token is None:
            raise ParseError(f"Unexpected end of scalar {self.text!r}")
        self.pos += 1
        return token

    def _expr(self) -> GaussianRational:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> GaussianRational:
        value = self._unary()
        while True:
            token = self._peek()
            if token in ("*", "/"):
                self._take()
                rhs = self._unary()
                if token == "*":
                    value = value * rhs
                else:
                    if not rhs:
                        raise ParseError(f"Division by zero in scalar {self.text!r}")
                    value = value / rhs
            elif token is not None and (token.isdigit() or token in ("i", "(")):
                # implicit product, as in "2i" or "3(1+i)"
                value = value * self._atom()
            else:
                return value

    def _unary(self) -> GaussianRational:
        token = self._peek()
        if token == "-":
            self._take()
            return -self._unary()
        if token == "+":
            self._take()
            return self._unary()
        return self._atom()

    def _atom(self) -> GaussianRational:
        token = self._take()
        if token.isdigit():
            return GaussianRational(int(token))
        if token == "i":
            return I_UNIT
        if token == "(":
            value = self._expr()
            if self._take() != ")":
                raise ParseError(f"Unbalanced parenthesis in scalar {self.text!r}")
            return value
        raise ParseError(f"Unexpected token {token!r} in scalar {self.text!r}")


def parse_scalar(text: str) -> GaussianRational:
    """Parse a complex scalar from text."""
    return GaussianRational.from_string(text)


def parse_rational(text: str) -> Fraction:
    """Parse a real scalar from text, rejecting non-real values."""
    value = GaussianRational.from_string(text)
    if not value.is_real():
        raise ParseError(f"Expected a real value, got: {text!r}")
    return value.re
