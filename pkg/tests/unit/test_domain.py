"""
Unit tests for exact scalars and matrices.
"""

from fractions import Fraction

import pytest

from solvmanifold_kit.domain import (
    ExactMatrix,
    GaussianRational,
    QuadraticScalar,
    intersection_dimension,
    parse_rational,
    parse_scalar,
    span_rank,
)
from solvmanifold_kit.utilities.constants import ParseError, ValidationError

IMAG = GaussianRational(0, 1)


class TestGaussianRational:
    """Test cases for Q(i) arithmetic and its text grammar."""

    @pytest.mark.parametrize(
        ("text", "re", "im"),
        [
            ("0", 0, 0),
            ("-1/2", Fraction(-1, 2), 0),
            ("i", 0, 1),
            ("i/2", 0, Fraction(1, 2)),
            ("2i/3", 0, Fraction(2, 3)),
            ("-1/2+3*i", Fraction(-1, 2), 3),
            ("(1+i)/4", Fraction(1, 4), Fraction(1, 4)),
            ("2+3*i", 2, 3),
            (" 1 - i ", 1, -1),
        ],
    )
    def test_parse(self, text, re, im):
        value = parse_scalar(text)
        assert value.re == re
        assert value.im == im

    @pytest.mark.parametrize("text", ["", "1+", "1/0", "(1+i", "x", "1//2", "i)"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_render_round_trip(self):
        """str() produces text in the input grammar."""
        for text in ("-1/2+3*i", "i", "-i", "1/3-2/5*i", "7"):
            assert str(parse_scalar(text)) == text

    def test_field_operations(self):
        a = GaussianRational(1, 2)
        b = GaussianRational(Fraction(1, 3), -1)
        assert a * a.inverse() == 1
        assert (a + b) - b == a
        assert a * b == GaussianRational(Fraction(7, 3), Fraction(-1, 3))
        assert IMAG * IMAG == -1
        assert a.conjugate() * a == a.norm()
        assert (a / b) * b == a

    def test_equality_with_rationals(self):
        """Real Gaussian rationals compare and hash like Fractions."""
        assert GaussianRational(3) == 3
        assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert GaussianRational(1, 1) != 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(0).inverse()

    def test_parse_rational_rejects_complex(self):
        assert parse_rational("-3/4") == Fraction(-3, 4)
        with pytest.raises(ParseError):
            parse_rational("i")

    def test_booleans_rejected(self):
        with pytest.raises(TypeError):
            GaussianRational(True)


class TestQuadraticScalar:
    """Test cases for Q(sqrt d)."""

    def test_golden_ratio_identity(self):
        """phi = (1 + sqrt 5)/2 satisfies phi^2 = phi + 1."""
        phi = QuadraticScalar(5, Fraction(1, 2), Fraction(1, 2))
        assert phi * phi == phi + 1
        assert phi * phi.conjugate() == -1

    def test_non_squarefree_radicand(self):
        """d = 12 is accepted; elements are compared by (a, b)."""
        x = QuadraticScalar(12, 1, 1)
        assert x * x.inverse() == 1
        assert x.norm() == -11

    @pytest.mark.parametrize("d", [0, -3, 4, 9])
    def test_invalid_radicand(self, d):
        with pytest.raises(ValidationError):
            QuadraticScalar(d, 1, 1)

    def test_mixed_radicands(self):
        with pytest.raises(ValueError):
            _ = QuadraticScalar.sqrt(2) + QuadraticScalar.sqrt(3)

    def test_text(self):
        assert str(QuadraticScalar(5, Fraction(3, 2), Fraction(1, 2))) == "3/2+1/2*sqrt(5)"
        assert str(QuadraticScalar(13, Fraction(-3, 2), -1)) == "-3/2-sqrt(13)"
        assert QuadraticScalar.from_string("-3/2+1/2*sqrt(13)") == QuadraticScalar(
            13, Fraction(-3, 2), Fraction(1, 2)
        )

    def test_from_string_needs_radical(self):
        with pytest.raises(ParseError):
            QuadraticScalar.from_string("3/2")


class TestExactMatrix:
    """Test cases for fraction-free linear algebra."""

    def test_rank_and_kernel(self):
        m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert m.rank() == 2
        kernel = m.kernel_basis()
        assert len(kernel) == 1
        assert all(not x for x in m.apply(kernel[0]))

    def test_determinant_with_row_swap(self):
        m = ExactMatrix([[0, 1], [1, 0]])
        assert m.determinant() == -1
        assert ExactMatrix([[2, 1], [4, 2]]).determinant() == 0

    def test_inverse(self):
        m = ExactMatrix([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
        assert m @ m.inverse() == ExactMatrix.identity(3)

    def test_singular_inverse(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 1], [1, 1]]).inverse()

    def test_gaussian_entries(self):
        m = ExactMatrix([[IMAG, 1], [1, IMAG]])
        assert m.determinant() == -2
        assert m.rank() == 2
        assert m.conjugate_transpose()[0, 0] == -IMAG

    def test_charpoly(self):
        """Faddeev-LeVerrier: coefficients of det(xI - M), leading first."""
        m = ExactMatrix([[2, 1], [1, 3]])
        assert m.charpoly() == [1, -5, 5]

    def test_solve(self):
        m = ExactMatrix([[1, 1], [1, -1]])
        assert m.solve([3, 1]) == (2, 1)
        assert ExactMatrix([[1, 1], [2, 2]]).solve([1, 3]) is None

    def test_shape_errors(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2]]).determinant()
        with pytest.raises(ValueError):
            _ = ExactMatrix([[1]]) + ExactMatrix([[1, 2]])

    def test_span_helpers(self):
        u = [[1, 0, 0], [0, 1, 0]]
        v = [[0, 1, 0], [0, 0, 1]]
        assert span_rank(u + v, 3) == 3
        assert intersection_dimension(u, v, 3) == 1
        assert span_rank([], 3) == 0
