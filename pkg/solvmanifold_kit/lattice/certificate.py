"""
Lattice certificates for the almost-nilpotent groups G5^alpha.

At tau = s*pi/alpha the one-parameter group exp(tau ad_e5) is diagonal, and it
is conjugate to an integer unimodular matrix B_s exactly when
e^{-tau} + (-1)^s e^{tau} = n is an integer. Everything is checked in
Q(sqrt(D)) with D = n^2 - 4(-1)^s; tau and alpha stay symbolic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..domain.matrix import ExactMatrix
from ..domain.quadratic import QuadraticScalar
from ..utilities.constants import InternalConsistencyError, ValidationError

logger = logging.getLogger(__name__)

MIN_TRACE = 3


def _sign(s: int) -> int:
    return 1 if s % 2 == 0 else -1


def _validate(s: int, n: int) -> None:
    if isinstance(s, bool) or not isinstance(s, int) or s == 0:
        raise ValidationError(f"s must be a nonzero integer, got: {s!r}")
    if isinstance(n, bool) or not isinstance(n, int) or n < MIN_TRACE:
        raise ValidationError(f"n must be an integer >= {MIN_TRACE}, got: {n!r}")


def discriminant(s: int, n: int) -> int:
    """D = n^2 - 4(-1)^s."""
    _validate(s, n)
    return n * n - 4 * _sign(s)


def exp_minus_tau(s: int, n: int) -> QuadraticScalar:
    """e^{-tau} = (n + sqrt(D)) / 2."""
    d = discriminant(s, n)
    return QuadraticScalar(d, Fraction(n, 2), Fraction(1, 2))


def exp_ad_at_tau(s: int, n: int) -> ExactMatrix:
    """
    exp(tau ad_e5) at tau = tau_{s,n}.

    With cos(alpha tau) = (-1)^s and sin(alpha tau) = 0 the matrix is
    diag(e^{-tau}, e^{-tau}, (-1)^s e^{tau}, (-1)^s e^{tau}).
    """
    a = exp_minus_tau(s, n)
    b = _sign(s) * a.inverse()
    return ExactMatrix.diagonal([a, a, b, b])


def integer_matrix(s: int, n: int) -> ExactMatrix:
    """The unimodular integer matrix B_s, two copies of [[0, (-1)^{s+1}], [1, n]]."""
    _validate(s, n)
    off = -_sign(s)
    return ExactMatrix(
        [
            [0, off, 0, 0],
            [1, n, 0, 0],
            [0, 0, 0, off],
            [0, 0, 1, n],
        ]
    )


def conjugator(s: int, n: int) -> ExactMatrix:
    """Q with beta_+- = (-n +- sqrt(D)) / 2."""
    d = discriminant(s, n)
    plus = QuadraticScalar(d, Fraction(-n, 2), Fraction(1, 2))
    minus = plus.conjugate()
    zero, one = QuadraticScalar(d), QuadraticScalar(d, 1)
    return ExactMatrix(
        [
            [zero, plus, zero, minus],
            [zero, one, zero, one],
            [plus, zero, minus, zero],
            [one, zero, one, zero],
        ]
    )


def expected_charpoly(s: int, n: int) -> tuple[int, ...]:
    """Coefficients of (x^2 - n x + (-1)^s)^2, leading first."""
    sigma = _sign(s)
    return (1, -2 * n, n * n + 2 * sigma, -2 * n * sigma, 1)


def _as_integer(value: Any) -> int:
    rational = value.a if isinstance(value, QuadraticScalar) and value.is_rational() else value
    if not isinstance(rational, int | Fraction) or Fraction(rational).denominator != 1:
        raise InternalConsistencyError(f"Characteristic coefficient is not an integer: {value}")
    return int(rational)


def _lift(matrix: ExactMatrix, d: int) -> ExactMatrix:
    return ExactMatrix(
        [[QuadraticScalar(d, x) for x in row] for row in matrix.entries()], cols=matrix.cols
    )


def alpha_expression(s: int, n: int) -> dict[str, Any]:
    """tau_{s,n} and alpha_{s,n} as text; alpha is positive exactly when s < 0."""
    d = discriminant(s, n)
    root = f"(({n}+sqrt({d}))/2)"
    return {
        "tau": f"-log{root}",
        "alpha": f"-{s}*pi/log{root}" if s > 0 else f"{-s}*pi/log{root}",
        "alpha_positive": s < 0,
    }


@dataclass(frozen=True)
class LatticeCertificate:
    """Q exp(tau ad_e5) Q^-1 = B_s, checked exactly."""

    s: int
    n: int
    D: int
    M: ExactMatrix
    Bs: ExactMatrix
    Q: ExactMatrix
    charpoly: tuple[int, ...]

    @property
    def determinant(self) -> int:
        return _as_integer(self.Bs.determinant())

    def to_dict(self) -> dict[str, Any]:
        def render(matrix: ExactMatrix) -> list[list[str]]:
            return [[str(x) for x in row] for row in matrix.entries()]

        return {
            "s": self.s,
            "n": self.n,
            "D": self.D,
            "M": render(self.M),
            "Bs": render(self.Bs),
            "Q": render(self.Q),
            "det_Bs": self.determinant,
            "charpoly": list(self.charpoly),
            "symbolic": alpha_expression(self.s, self.n),
        }


def certificate(s: int, n: int) -> LatticeCertificate:
    """Build and verify the lattice certificate for (s, n)."""
    d = discriminant(s, n)
    m = exp_ad_at_tau(s, n)
    bs = integer_matrix(s, n)
    q = conjugator(s, n)

    if not q.is_invertible():
        raise InternalConsistencyError(f"Q is singular for s={s}, n={n}")
    if q @ m @ q.inverse() != _lift(bs, d):
        raise InternalConsistencyError(f"Q M Q^-1 != B_s for s={s}, n={n}")

    charpoly = tuple(_as_integer(c) for c in m.charpoly())
    if charpoly != expected_charpoly(s, n):
        raise InternalConsistencyError(f"charpoly {charpoly} for s={s}, n={n}")
    if abs(_as_integer(bs.determinant())) != 1:
        raise InternalConsistencyError(f"B_s is not unimodular for s={s}, n={n}")

    logger.info(f"Lattice certificate s={s}, n={n}: D={d}, charpoly {charpoly}")
    return LatticeCertificate(s, n, d, m, bs, q, charpoly)


def render_charpoly(coefficients: tuple[int, ...], variable: str = "x") -> str:
    """Plain polynomial text, leading term first."""
    degree = len(coefficients) - 1
    terms: list[str] = []
    for power, c in zip(range(degree, -1, -1), coefficients, strict=True):
        if c == 0:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            monomial = variable if power == 1 else f"{variable}^{power}"
            body = monomial if abs(c) == 1 else f"{abs(c)}*{monomial}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
