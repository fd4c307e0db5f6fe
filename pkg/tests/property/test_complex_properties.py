"""
Property-based tests for exterior forms, coframes and double complexes.

Random constant-coefficient forms are pushed through d, ∂ and ∂̄ of random
splitting-type structures; the identities of a double complex must hold
for every draw.
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from solvmanifold_kit.classification import classify, has_trivial_canonical_bundle
from solvmanifold_kit.cohomology import cohomology, conjugation_symmetric, from_coframe
from solvmanifold_kit.domain import GaussianRational
from solvmanifold_kit.geometry.coframe import SplittingParams, canonical_trivial, splitting_coframe
from solvmanifold_kit.geometry.forms import Form
from solvmanifold_kit.geometry.realify import realify
from solvmanifold_kit.lie import catalog, label, raw_algebra, verify_isomorphism
from solvmanifold_kit.lie.catalog import all_labels_with_samples
from solvmanifold_kit.utilities.constants import Theory

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)
coefficients = st.integers(min_value=-3, max_value=3).filter(bool)


@st.composite
def gaussian_scalars(draw):
    return GaussianRational(draw(small_fractions), draw(small_fractions))


@st.composite
def splitting_params(draw):
    """Generate non-degenerate C2 parameters."""
    eps = draw(st.integers(min_value=0, max_value=1))
    A, B = draw(gaussian_scalars()), draw(gaussian_scalars())
    if eps == 0 and not A and not B:
        A = GaussianRational(1)
    return SplittingParams.c2(A, B, eps)


@st.composite
def forms(draw, generators=6, max_terms=4):
    """Generate homogeneous forms with integer coefficients."""
    degree = draw(st.integers(min_value=1, max_value=generators - 1))
    keys = st.lists(
        st.integers(min_value=0, max_value=generators - 1),
        min_size=degree,
        max_size=degree,
        unique=True,
    )
    terms = draw(st.lists(st.tuples(keys, coefficients), min_size=1, max_size=max_terms))
    return Form({tuple(key): coeff for key, coeff in terms})


def _degree(form: Form) -> int:
    return next(iter(form.degrees()), 0)


@st.composite
def in_range_labels(draw):
    """Generate catalog labels with parameters in the canonical ranges."""
    index = draw(st.integers(min_value=1, max_value=12))
    positive = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)
    unit = st.fractions(min_value=0, max_value=1, max_denominator=6)
    match index:
        case 5 | 8:
            return label(index, draw(positive))
        case 6:
            return label(6, draw(positive), draw(unit.filter(lambda b: 0 < b < 1)))
        case 7:
            return label(7, draw(unit.filter(bool)))
        case 10:
            return label(10, draw(small_fractions.filter(bool)), draw(small_fractions))
        case 11:
            return label(11, draw(unit.filter(lambda a: 0 < a < 1)))
        case _:
            return label(index)


class TestRealForms:
    """Exterior algebra identities and d² = 0 on the catalog."""

    @given(forms(), forms(), forms())
    def test_wedge_is_associative(self, a, b, c):
        assert (a ^ b) ^ c == a ^ (b ^ c)

    @given(forms(), forms())
    def test_graded_commutativity(self, a, b):
        sign = (-1) ** (_degree(a) * _degree(b))
        assert a ^ b == (b ^ a).scale(sign)

    @settings(deadline=None)
    @given(st.sampled_from(all_labels_with_samples()), forms(), forms())
    def test_d_is_a_square_zero_derivation(self, entry, a, b):
        g = catalog(entry)
        assert g.d(g.d(a)).is_zero()
        sign = (-1) ** _degree(a)
        assert g.d(a ^ b) == (g.d(a) ^ b) + (a ^ g.d(b)).scale(sign)


class TestCatalogSoundness:
    """Every in-range catalog member is a unimodular Lie algebra."""

    @settings(max_examples=240, deadline=None)
    @given(in_range_labels())
    def test_jacobi_and_unimodular(self, entry):
        assert entry.in_range()
        g = catalog(entry)
        assert g.jacobi_check()
        assert g.unimodular_check()


class TestComplexStructures:
    """∂ and ∂̄ on random splitting-type structures."""

    @settings(max_examples=50, deadline=None)
    @given(splitting_params(), forms())
    def test_double_complex_identities(self, params, form):
        cf = splitting_coframe(params)
        gaussian = form.map_coefficients(GaussianRational.coerce)
        assert cf.is_integrable()
        assert cf.d(cf.d(gaussian)).is_zero()
        assert cf.del_(cf.del_(gaussian)).is_zero()
        assert cf.delbar(cf.delbar(gaussian)).is_zero()
        assert (cf.del_(cf.delbar(gaussian)) + cf.delbar(cf.del_(gaussian))).is_zero()
        assert cf.del_(gaussian) + cf.delbar(gaussian) == cf.d(gaussian)

    @settings(max_examples=50, deadline=None)
    @given(splitting_params(), forms())
    def test_d_commutes_with_conjugation(self, params, form):
        cf = splitting_coframe(params)
        gaussian = form.map_coefficients(GaussianRational.coerce)
        assert cf.d(cf.conjugate(gaussian)) == cf.conjugate(cf.d(gaussian))

    @settings(max_examples=6, deadline=None)
    @given(splitting_params())
    def test_cohomology_symmetries(self, params):
        """Bott-Chern numbers are conjugation symmetric; Frölicher bounds Betti numbers."""
        dc = from_coframe(splitting_coframe(params))
        assert conjugation_symmetric(dc, Theory.BOTT_CHERN)
        dolbeault = cohomology(dc, Theory.DOLBEAULT)
        de_rham = cohomology(dc, Theory.DE_RHAM)
        for k in range(7):
            assert dolbeault.total(k) >= de_rham.total(k)
        assert de_rham.total(0) == 1

    @settings(max_examples=25, deadline=None)
    @given(splitting_params())
    def test_classification_is_verified(self, params):
        """The label comes with a verified basis change; B = -eps forces a canonical-trivial label."""
        result = classify(params)
        assert result.label.index == 10 or result.label.in_range()
        src = realify(splitting_coframe(params))
        assert verify_isomorphism(src, raw_algebra(result.label), result.basis_change)
        trivial = canonical_trivial(splitting_coframe(params))
        assert trivial == (params.B == -params.eps)
        if trivial:
            assert has_trivial_canonical_bundle(result.label)
