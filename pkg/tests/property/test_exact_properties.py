"""
Property-based tests for exact scalars and matrices.

Uses Hypothesis for the field axioms of Q(i) and sympy as an independent
oracle for rank, determinant and characteristic polynomial.
"""

from fractions import Fraction

import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from solvmanifold_kit.domain import ExactMatrix, GaussianRational, QuadraticScalar, parse_scalar

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def gaussian_rationals(draw):
    """Generate elements of Q(i) with small heights."""
    return GaussianRational(draw(small_fractions), draw(small_fractions))


@st.composite
def integer_matrices(draw, max_size=5):
    """Generate square integer matrices with entries in [-4, 4]."""
    size = draw(st.integers(min_value=1, max_value=max_size))
    entry = st.integers(min_value=-4, max_value=4)
    return draw(st.lists(st.lists(entry, min_size=size, max_size=size), min_size=size, max_size=size))


class TestGaussianFieldProperties:
    """Field axioms of the Gaussian rationals."""

    @given(gaussian_rationals(), gaussian_rationals(), gaussian_rationals())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(gaussian_rationals())
    def test_inverse(self, a):
        assume(a)
        assert a * a.inverse() == 1

    @given(gaussian_rationals(), gaussian_rationals())
    def test_conjugation_is_a_field_automorphism(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert a.norm() == a * a.conjugate()
        assert a.norm() >= 0

    @given(gaussian_rationals())
    def test_text_parses_back(self, a):
        assert parse_scalar(str(a)) == a


class TestQuadraticProperties:
    """Arithmetic in Q(sqrt d)."""

    @given(
        st.sampled_from([2, 3, 5, 13]),
        small_fractions,
        small_fractions,
        small_fractions,
        small_fractions,
    )
    def test_norm_is_multiplicative(self, d, a1, b1, a2, b2):
        x, y = QuadraticScalar(d, a1, b1), QuadraticScalar(d, a2, b2)
        assert (x * y).norm() == x.norm() * y.norm()


class TestMatrixOracle:
    """ExactMatrix against sympy on random integer matrices."""

    @settings(max_examples=60, deadline=None)
    @given(integer_matrices())
    def test_rank_and_determinant(self, rows):
        ours = ExactMatrix(rows)
        oracle = sympy.Matrix(rows)
        assert ours.rank() == oracle.rank()
        assert ours.determinant() == int(oracle.det())

    @settings(max_examples=40, deadline=None)
    @given(integer_matrices(max_size=4))
    def test_charpoly(self, rows):
        x = sympy.Symbol("x")
        expected = [int(c) for c in sympy.Matrix(rows).charpoly(x).all_coeffs()]
        assert ExactMatrix(rows).charpoly() == expected

    @settings(max_examples=60, deadline=None)
    @given(integer_matrices())
    def test_rank_nullity(self, rows):
        m = ExactMatrix(rows)
        kernel = m.kernel_basis()
        assert m.rank() + len(kernel) == m.cols
        for vector in kernel:
            assert all(value == 0 for value in m.apply(vector))

    @settings(max_examples=40, deadline=None)
    @given(integer_matrices(max_size=4))
    def test_inverse_when_invertible(self, rows):
        m = ExactMatrix(rows)
        assume(m.determinant() != 0)
        assert m @ m.inverse() == ExactMatrix.identity(m.rows)
        assert m.inverse().determinant() == Fraction(1) / m.determinant()
