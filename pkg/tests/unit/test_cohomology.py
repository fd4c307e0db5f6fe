"""
Unit tests for double complexes and their cohomology.
"""

from math import comb

import pytest

from solvmanifold_kit.cohomology import (
    CohomologyTable,
    DoubleComplex,
    bc_aeppli_duality,
    cohomology,
    conjugation_symmetric,
    ddbar_failures,
    ddbar_lemma,
    frolicher_consistent,
    from_coframe,
    lemma_b_sufficient,
    verify_representatives,
)
from solvmanifold_kit.domain.gaussian import GaussianRational
from solvmanifold_kit.domain.matrix import ExactMatrix
from solvmanifold_kit.geometry.coframe import Coframe, SplittingParams, splitting_coframe
from solvmanifold_kit.utilities.constants import (
    IntegrabilityError,
    InternalConsistencyError,
    Theory,
    ValidationError,
)


@pytest.fixture(scope="module")
def abelian():
    return from_coframe(Coframe.abelian())


@pytest.fixture(scope="module")
def kt_complex():
    return from_coframe(splitting_coframe(SplittingParams.kt(1)))


def _curve_complex(del_value, delbar_value):
    """Complex of complex dimension 1 with prescribed ∂1 and ∂̄(a)."""
    bases = {(0, 0): ["1"], (1, 0): ["a"], (0, 1): ["b"], (1, 1): ["ab"]}
    return DoubleComplex(
        1,
        bases,
        {(0, 0): ExactMatrix([[del_value]])},
        {(1, 0): ExactMatrix([[delbar_value]])},
        {"1": "1", "a": "b", "b": "a", "ab": "ab"},
    )


class TestDoubleComplex:
    """Test cases for construction and the coframe complex."""

    def test_abelian_dimensions(self, abelian):
        for p in range(4):
            for q in range(4):
                assert abelian.dim(p, q) == comb(3, p) * comb(3, q)
        assert abelian.is_zero()

    def test_kt_delbar_entry(self, kt_complex):
        """dw2 = w1~1 puts a 1 in the ∂̄ matrix on (1,0)."""
        row = kt_complex.bases[(1, 1)].index("w1~1")
        col = kt_complex.bases[(1, 0)].index("w2")
        assert kt_complex.delbar[(1, 0)][row, col] == 1

    def test_labels(self, abelian):
        assert abelian.bases[(0, 0)] == ("1",)
        assert abelian.bases[(1, 0)] == ("w1", "w2", "w3")
        assert abelian.conjugation["w12~3"] == "w3~1~2"

    def test_non_integrable_rejected(self):
        kt = splitting_coframe(SplittingParams.kt(1))
        cf = Coframe([kt.monomial([], [1, 2]), kt.equations[1], kt.equations[2]])
        with pytest.raises(IntegrabilityError):
            from_coframe(cf)

    def test_anticommutation_enforced(self):
        """∂∂̄ + ∂̄∂ != 0 is rejected at construction."""
        with pytest.raises(InternalConsistencyError):
            _curve_complex(1, 1)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            DoubleComplex(1, {(0, 0): ["1"], (1, 0): ["a"]}, {(0, 0): ExactMatrix([[1, 0]])}, {})

    def test_total_differential_squares_to_zero(self, kt_complex):
        for k in range(6):
            product = kt_complex.total_differential(k + 1) @ kt_complex.total_differential(k)
            assert product.is_zero()


class TestCohomology:
    """Test cases for the four cohomology theories."""

    def test_abelian_dolbeault(self, abelian):
        table = cohomology(abelian, Theory.DOLBEAULT)
        assert all(table[(p, q)] == comb(3, p) * comb(3, q) for p, q in table.dims)

    def test_abelian_betti(self, abelian):
        table = cohomology(abelian, "de-rham")
        assert [table[k] for k in range(7)] == [comb(6, k) for k in range(7)]

    def test_kt_low_degrees(self, kt_complex):
        """Only w3 is ∂̄-closed among the (1,0)-forms of the KT structure."""
        dolbeault = cohomology(kt_complex, Theory.DOLBEAULT)
        assert dolbeault[(0, 0)] == 1
        assert dolbeault[(1, 0)] == 1
        assert cohomology(kt_complex, Theory.DE_RHAM)[0] == 1

    def test_bott_chern_symmetry(self, kt_complex):
        assert conjugation_symmetric(kt_complex, Theory.BOTT_CHERN)

    def test_duality_on_abelian(self, abelian):
        assert bc_aeppli_duality(abelian)

    def test_to_dict(self, abelian):
        data = cohomology(abelian, Theory.BOTT_CHERN).to_dict()
        assert data["theory"] == "bott_chern"
        assert data["dims"][0] == {"p": 0, "q": 0, "dim": 1}
        betti = cohomology(abelian, Theory.DE_RHAM).to_dict()
        assert betti["dims"][3] == {"k": 3, "dim": 20}

    def test_negative_dimensions_rejected(self):
        with pytest.raises(ValueError):
            CohomologyTable(Theory.DOLBEAULT, {(0, 0): -1})

    def test_frolicher_on_abelian(self, abelian):
        assert frolicher_consistent(abelian)


class TestDdbarLemma:
    """Test cases for the direct ∂∂̄-lemma decision."""

    def test_abelian_satisfies(self, abelian):
        assert ddbar_lemma(abelian)
        assert ddbar_failures(abelian) == []

    def test_kt_fails_at_one_one(self, kt_complex):
        """w1~1 = dw2 is closed and exact but not ∂∂̄-exact."""
        assert not ddbar_lemma(kt_complex)
        failures = ddbar_failures(kt_complex)
        assert any(f.bidegree == (1, 1) for f in failures)
        data = failures[0].to_dict()
        assert set(data) == {"p", "q", "exactness", "witness"}

    def test_curve_with_nonzero_delbar(self):
        """∂̄a = ab makes ab exact but never ∂∂̄-exact."""
        dc = _curve_complex(0, 1)
        assert not ddbar_lemma(dc)


class TestLemmaB:
    """Test cases for the vanishing-differential sufficient condition."""

    def test_zero_complex(self, abelian):
        assert lemma_b_sufficient(abelian)

    def test_nonzero_differential(self, kt_complex):
        assert not lemma_b_sufficient(kt_complex)

    def test_missing_conjugation(self):
        dc = DoubleComplex(1, {(0, 0): ["1"], (1, 0): ["a"], (0, 1): ["b"]}, {}, {})
        assert not lemma_b_sufficient(dc)


class TestRepresentatives:
    """Test cases for representative verification."""

    def test_abelian_dolbeault(self, abelian):
        forms = {(1, 0): [{"w1": 1}, {"w2": 1}, {"w3": 1}]}
        assert verify_representatives(abelian, Theory.DOLBEAULT, forms)

    def test_duplicate_fails(self, abelian):
        forms = {(1, 0): [{"w1": 1}, {"w1": 1}, {"w2": 1}]}
        assert not verify_representatives(abelian, Theory.DOLBEAULT, forms)

    def test_wrong_count_fails(self, abelian):
        assert not verify_representatives(abelian, Theory.BOTT_CHERN, {(1, 0): [{"w1": 1}]})

    def test_label_outside_bidegree(self, abelian):
        with pytest.raises(ValidationError):
            verify_representatives(abelian, Theory.DOLBEAULT, {(1, 0): [{"w1~1": 1}]})

    def test_de_rham_groups_by_degree(self, abelian):
        forms = {
            (1, 0): [{"w1": 1}, {"w2": 1}, {"w3": 1}],
            (0, 1): [{"w~1": 1}, {"w~2": 1}, {"w~3": GaussianRational(0, 1)}],
        }
        assert verify_representatives(abelian, Theory.DE_RHAM, forms)

    def test_kt_closed_holomorphic_form(self, kt_complex):
        assert verify_representatives(kt_complex, Theory.DOLBEAULT, {(1, 0): [{"w3": 1}]})

    def test_non_cocycle_fails(self, kt_complex):
        assert not verify_representatives(kt_complex, Theory.DOLBEAULT, {(1, 0): [{"w2": 1}]})
