"""
Unit tests for the Nakamura structures.

Tests for characters and their lattice restrictions, the exponential-form
engine, the complexes B and C, the J_C family with its moduli and
deformations, and the reference cohomology tables.
"""

from fractions import Fraction

import pytest

from solvmanifold_kit.classification.classifier import classify, jc_splitting_params
from solvmanifold_kit.cohomology import (
    cohomology,
    ddbar_lemma,
    lemma_b_sufficient,
    verify_representatives,
)
from solvmanifold_kit.domain.gaussian import GaussianRational, parse_scalar
from solvmanifold_kit.geometry.forms import complex_monomial
from solvmanifold_kit.nakamura import (
    Character,
    CharacterForm,
    LatticeClass,
    ModuliFamily,
    NakamuraParams,
    SymbolicExponent,
    build_complexes,
    char_restriction_trivial,
    characters,
    complexes_agree_across_k,
    defnak_family,
    deformation_summary,
    deformed_jc_coframe,
    equivalence_witness_JB,
    jc_coframe,
    jc_deformation_coefficients,
    lattice_class,
    moduli_family_coframe,
    moduli_invariant,
    nakamura_tables,
    odd_class_c,
    params_report,
)
from solvmanifold_kit.nakamura.tables import (
    BETTI_NUMBERS,
    BIDEGREES,
    BOTT_CHERN_REPRESENTATIVES_T0,
    C_EXTRA_GENERATORS,
    DEFORMATION_SUMMARY,
    DOLBEAULT_TABLE,
)
from solvmanifold_kit.utilities.constants import NAKAMURA_C_SAMPLES, Theory, ValidationError

IMAG = GaussianRational(0, 1)
C_SAMPLES = [parse_scalar(text) for text in NAKAMURA_C_SAMPLES]


def _c(text):
    return parse_scalar(text)


class TestCharacters:
    """Test cases for the six characters of J_C."""

    @pytest.mark.parametrize("C", C_SAMPLES)
    def test_beta_gamma_unitary(self, C):
        chars = characters(C)
        for name in ("beta1", "beta2", "gamma1", "gamma2"):
            assert chars[name].is_unitary

    def test_alpha_not_unitary(self):
        assert not characters(_c("1+i"))["alpha1"].is_unitary

    @pytest.mark.parametrize("C", C_SAMPLES)
    def test_alpha_over_beta_holomorphic(self, C):
        chars = characters(C)
        assert (chars["alpha1"] * chars["beta1"].inverse()).is_holomorphic
        assert (chars["alpha2"] * chars["beta2"].inverse()).is_holomorphic

    def test_real_c_rejected(self):
        with pytest.raises(ValidationError):
            characters(GaussianRational(2))

    def test_beta_at_i(self):
        """C = i: beta_1 = exp(-2i z3 - 2i conj(z3))."""
        beta = characters(IMAG)["beta1"]
        assert beta == Character(GaussianRational(0, -2), GaussianRational(0, -2))

    def test_conjugate_and_power(self):
        ch = Character(GaussianRational(1, 2), GaussianRational(0, 3))
        assert ch.conjugate() == Character(GaussianRational(0, -3), GaussianRational(1, -2))
        assert ch.power(2) == ch * ch
        assert (ch * ch.inverse()).is_trivial


class TestLatticeRestriction:
    """Test cases for triviality of characters on the lattice Γ'_C."""

    @pytest.mark.parametrize("C", C_SAMPLES)
    def test_beta_over_gamma_always_trivial(self, C):
        chars = characters(C)
        assert char_restriction_trivial(chars["beta1"] * chars["gamma2"], C)

    def test_beta_alone(self):
        """beta_1 is trivial exactly for C = i/(2k+1)."""
        assert char_restriction_trivial(characters(_c("i/3"))["beta1"], _c("i/3"))
        assert char_restriction_trivial(characters(IMAG)["beta1"], IMAG)
        assert not char_restriction_trivial(characters(_c("i/2"))["beta1"], _c("i/2"))

    def test_beta_gamma_product(self):
        """beta_1 gamma_1 is trivial exactly for C = i/k."""
        for text, expected in (("i/2", True), ("i/4", True), ("1+i", False), ("2*i/3", False)):
            chars = characters(_c(text))
            assert char_restriction_trivial(chars["beta1"] * chars["gamma1"], _c(text)) is expected

    def test_symbolic_exponent(self):
        assert SymbolicExponent(pi=GaussianRational(-4)).is_trivial
        assert not SymbolicExponent(pi=GaussianRational(3)).is_trivial
        assert not SymbolicExponent(pi=GaussianRational(Fraction(1, 2))).is_trivial
        assert not SymbolicExponent(log=GaussianRational(1)).is_trivial
        assert not SymbolicExponent(pi=GaussianRational(0, 2)).is_trivial

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("i", LatticeClass.ODD),
            ("-i", LatticeClass.ODD),
            ("i/3", LatticeClass.ODD),
            ("i/2", LatticeClass.EVEN),
            ("i/4", LatticeClass.EVEN),
            ("1+i", LatticeClass.GENERIC),
            ("2*i/3", LatticeClass.GENERIC),
        ],
    )
    def test_lattice_class(self, text, expected):
        assert lattice_class(_c(text)) == expected

    def test_odd_class_c(self):
        assert odd_class_c(-1) == GaussianRational(0, -1)
        assert odd_class_c(1) == _c("i/3")


class TestNakamuraParams:
    """Test cases for parameter validation."""

    def test_deformation_needs_odd_class(self):
        with pytest.raises(ValidationError):
            NakamuraParams.of("i/2", "1/2")

    def test_deformation_needs_small_t(self):
        with pytest.raises(ValidationError):
            NakamuraParams.of("i", 1)

    def test_to_dict(self):
        data = NakamuraParams.of("i/3", "1/4").to_dict()
        assert data == {"C": "1/3*i", "t": "1/4", "class": "i/(2k+1)"}


class TestCharacterForm:
    """Test cases for forms with exponential coefficients."""

    KAPPA = Character(GaussianRational(0, -2))

    def test_d_at_t_zero(self):
        """d(exp(-2i z3) dz1) = 2i phi^13."""
        phi1 = CharacterForm.factor(self.KAPPA, 0)
        assert phi1.d() == CharacterForm({(self.KAPPA, (0, 2)): GaussianRational(0, 2)})

    def test_d_deformed(self):
        """t = 1/2 scales by 4/3 and adds a conj(phi^3) component."""
        phi_tilde = CharacterForm.factor(self.KAPPA, 3)
        expected = CharacterForm(
            {
                (self.KAPPA, (2, 3)): GaussianRational(0, Fraction(-8, 3)),
                (self.KAPPA, (3, 5)): GaussianRational(0, Fraction(-4, 3)),
            }
        )
        assert phi_tilde.d(GaussianRational(Fraction(1, 2))) == expected

    def test_d_squared(self):
        t = GaussianRational(Fraction(1, 4), Fraction(1, 4))
        form = CharacterForm.factor(self.KAPPA, 0).wedge(
            CharacterForm.factor(self.KAPPA.inverse(), 4)
        ) + CharacterForm.factor(self.KAPPA, 3)
        assert form.d(t).d(t).is_zero()

    def test_conjugate_involution(self):
        form = CharacterForm.factor(self.KAPPA, 0).wedge(CharacterForm.factor(Character(), 5))
        assert form.conjugate().conjugate() == form
        assert form.conjugate().bidegrees() == {(1, 1)}

    def test_merging(self):
        phi = CharacterForm.factor(self.KAPPA, 1)
        assert len(phi + phi) == 1
        assert (phi + phi.scale(-1)).is_zero()
        assert phi.wedge(phi).is_zero()


class TestComplexes:
    """Test cases for the complexes B and C."""

    def test_odd_class_b(self):
        b, _ = build_complexes(NakamuraParams.of("i/3"))
        assert b.bases[(1, 0)] == ("phi^1", "phi^2", "phi^3")
        listed = DOLBEAULT_TABLE[LatticeClass.ODD]
        assert all(b.dim(bidegree) == len(listed[bidegree]) for bidegree in BIDEGREES)

    def test_generic_b(self):
        b, c = build_complexes(NakamuraParams.of("1+i"))
        assert b.bases[(1, 1)] == ("phi^1~2", "phi^2~1", "phi^3b3")
        assert lemma_b_sufficient(b)
        assert c.dimensions() == b.dimensions()

    def test_even_class_not_conjugation_closed(self):
        b, _ = build_complexes(NakamuraParams.of("i/2"))
        assert b.dim(1, 0) == 1
        assert b.dim(1, 1) == 5
        assert not lemma_b_sufficient(b)

    def test_deformed_c_dimensions(self):
        _, c = build_complexes(NakamuraParams.of("i", "1/2"))
        assert c.dim(1, 0) == 5
        assert c.bases[(1, 0)] == ("phi^1", "phi^2", "phi^3", "phi^b~1", "phi^b~2")
        for bidegree in ((1, 1), (2, 1), (1, 2), (2, 2)):
            assert c.dim(bidegree) == 15
        assert c.dim(3, 0) == 1
        assert c.conjugation_closed()

    @pytest.mark.parametrize("t", ["0", "1/2"])
    def test_c_extra_generators(self, t):
        b, c = build_complexes(NakamuraParams.of("i/3", t))
        for bidegree in BIDEGREES:
            extra = set(c.bases[bidegree]) - set(b.bases[bidegree])
            assert extra == set(C_EXTRA_GENERATORS.get(bidegree, ()))

    def test_b_has_no_delbar_at_t_zero(self):
        b, c = build_complexes(NakamuraParams.of("i"))
        assert all(m.is_zero() for m in b.delbar.values())
        assert not all(m.is_zero() for m in c.delbar.values())

    @pytest.mark.parametrize("t", ["0", "1/2", "(1+i)/4"])
    def test_independent_of_k(self, t):
        assert complexes_agree_across_k(parse_scalar(t))


class TestNakamuraCohomology:
    """Test cases for the recomputed cohomology of the Nakamura structures."""

    @pytest.mark.parametrize("C", C_SAMPLES)
    def test_betti_numbers(self, C):
        _, c = build_complexes(NakamuraParams(C))
        betti = cohomology(c, Theory.DE_RHAM)
        assert tuple(betti[k] for k in range(7)) == BETTI_NUMBERS

    def test_even_class_hodge(self):
        b, _ = build_complexes(NakamuraParams.of("i/2"))
        assert cohomology(b, Theory.DOLBEAULT)[(1, 1)] == 5

    @pytest.mark.parametrize("C", C_SAMPLES)
    def test_ddbar_lemma_iff_not_i_over_k(self, C):
        _, c = build_complexes(NakamuraParams(C))
        assert ddbar_lemma(c) is (lattice_class(C) == LatticeClass.GENERIC)

    @pytest.mark.parametrize("t", ["1/2", "1/4", "(1+i)/4"])
    def test_deformation_restores_ddbar(self, t):
        b, c = build_complexes(NakamuraParams.of("i", t))
        assert ddbar_lemma(c)
        dolbeault = cohomology(b, Theory.DOLBEAULT)
        bott_chern = cohomology(c, Theory.BOTT_CHERN)
        for bidegree, (_, _, h_dbar, h_bc) in DEFORMATION_SUMMARY.items():
            assert dolbeault[bidegree] == h_dbar
            assert bott_chern[bidegree] == h_bc

    def test_summary_at_t_zero(self):
        b, c = build_complexes(NakamuraParams.of("i/3"))
        dolbeault = cohomology(b, Theory.DOLBEAULT)
        bott_chern = cohomology(c, Theory.BOTT_CHERN)
        for bidegree, (h_dbar, h_bc, _, _) in DEFORMATION_SUMMARY.items():
            assert dolbeault[bidegree] == h_dbar
            assert bott_chern[bidegree] == h_bc
        assert bott_chern[(2, 2)] == 11

    def test_reference_lists_agree_with_summary(self):
        for bidegree, (_, h_bc, _, _) in DEFORMATION_SUMMARY.items():
            assert len(BOTT_CHERN_REPRESENTATIVES_T0[bidegree]) == h_bc

    @pytest.mark.parametrize("C", ["i", "i/3"])
    def test_bott_chern_1_3_classes_are_closed(self, C):
        """phi^1~1~2b3 has a nonzero ∂; the listed (1,3) classes are ∂- and ∂̄-closed."""
        _, c = build_complexes(NakamuraParams.of(C))
        listed = BOTT_CHERN_REPRESENTATIVES_T0[(1, 3)]
        assert "phi^1~1~2b3" not in listed
        forms = {(1, 3): [{label: 1} for label in listed]}
        assert verify_representatives(c, Theory.BOTT_CHERN, forms)
        assert not verify_representatives(c, Theory.BOTT_CHERN, {(1, 3): [{"phi^1~1~2b3": 1}]})

    @pytest.mark.parametrize("C, t", [("i", "0"), ("i", "1/2"), ("i/2", "0"), ("1+i", "0")])
    def test_params_report_matches(self, C, t):
        report = params_report(NakamuraParams.of(C, t))
        assert report.matches
        assert all(report.representatives_verified.values())

    def test_nakamura_tables(self):
        tables = nakamura_tables(["i", "i/2", "2+3*i"], ["1/4"], verify=False)
        assert len(tables.reports) == 4
        assert tables.matches
        assert tables.mismatches() == []
        cell = tables.to_dict()["reports"][0]["cells"][0]
        assert set(cell) == {"C", "t", "theory", "bidegree", "dim", "expected", "generators"}


class TestJCFamily:
    """Test cases for the J_C structure equations and the moduli families."""

    def test_jc_at_i(self):
        """C = i leaves only the (1,1) parts -2i w1~3 and 2i w2~3."""
        cf = jc_coframe(IMAG)
        assert cf.equations[0] == complex_monomial([1], [3], 3, GaussianRational(0, -2))
        assert cf.equations[1] == complex_monomial([2], [3], 3, GaussianRational(0, 2))

    def test_jc_at_minus_i(self):
        cf = jc_coframe(-IMAG)
        assert cf.equations[0] == complex_monomial([1, 3], [], 3, GaussianRational(0, 2))
        assert cf.is_integrable()

    @pytest.mark.parametrize("C", ["i", "i/2", "1+i", "2+3*i"])
    def test_jc_classifies_as_s12(self, C):
        assert classify(jc_splitting_params(_c(C))).label.index == 12

    @pytest.mark.parametrize(
        "family, param, expected",
        [("i", 0, 1), ("ii", 0, 1), ("ii", "2+i", 1), ("iii", 0, 0), ("iii", "1/2", 0)],
    )
    def test_moduli_invariant(self, family, param, expected):
        assert moduli_invariant(family, param) == expected

    def test_moduli_ranges(self):
        with pytest.raises(ValidationError):
            moduli_family_coframe(ModuliFamily.J_A, 1)
        with pytest.raises(ValidationError):
            moduli_family_coframe(ModuliFamily.J_B, "1+i")
        with pytest.raises(ValidationError):
            ModuliFamily.from_string("iv")
        assert ModuliFamily.from_string("(iii)") == ModuliFamily.J_B

    @pytest.mark.parametrize("B", ["1/2", "-1/3", "(1+i)/3"])
    def test_jb_equivalence(self, B):
        witness = equivalence_witness_JB(_c(B))
        assert witness.verified
        inverse = 1 / _c(B)
        expected = complex_monomial([1, 3], [], 3, GaussianRational(-1)) + complex_monomial(
            [1], [3], 3, inverse
        )
        assert witness.target.equations[0] == expected

    def test_jb_equivalence_rejects_zero(self):
        with pytest.raises(ValidationError):
            equivalence_witness_JB(0)


class TestDeformations:
    """Test cases for the deformations of J_0 and of J_C."""

    def test_defnak_at_zero(self):
        report = defnak_family(0)
        assert report.canonical_trivial
        assert report.closed_holomorphic_forms == 1
        assert report.equations_match

    @pytest.mark.parametrize("t", ["1/4", "(1+i)/4", "-1/3"])
    def test_defnak_nonzero(self, t):
        report = defnak_family(_c(t))
        assert report.equations_match
        assert not report.canonical_trivial
        assert report.closed_holomorphic_forms == 0
        assert report.to_dict()["closed_1_0_forms"] == 0

    def test_defnak_rejects_large_t(self):
        with pytest.raises(ValidationError):
            defnak_family(2)

    def test_coefficients_at_zero(self):
        C = _c("1+2*i")
        assert jc_deformation_coefficients(C, 0) == (-(C - IMAG), -(C + IMAG))

    @pytest.mark.parametrize("C, t", [("i", "1/2"), ("i/3", "(1+i)/4"), ("1+i", "-1/3")])
    def test_deformed_coframe_matches_formula(self, C, t):
        """w3 + t conj(w3) reproduces the displayed coefficients at -t."""
        cf = deformed_jc_coframe(_c(C), _c(t))
        first, second = jc_deformation_coefficients(_c(C), -_c(t))
        assert cf.equations[0].coefficient((0, 2)) == first
        assert cf.equations[0].coefficient((0, 5)) == second
        assert cf.equations[1].coefficient((1, 2)) == -first
        assert cf.equations[1].coefficient((1, 5)) == -second
        assert cf.is_integrable()
        assert cf.canonical_trivial()


class TestDeformationSummary:
    """Test cases for the recomputed deformation summary."""

    def test_summary_matches_reference(self):
        """C = i with t = 1/2 reproduces every summary row and both ∂∂̄ verdicts."""
        summary = deformation_summary("i", "1/2")
        assert summary.matches
        assert not summary.ddbar_t0
        assert summary.ddbar_t
        row = {r.bidegree: r for r in summary.rows}[(2, 2)]
        assert row.computed == (9, 11, 3, 3)

    def test_summary_serializes(self):
        data = deformation_summary("i", "1/4").to_dict()
        assert data["matches_reference"] is True
        assert len(data["rows"]) == len(BIDEGREES)

    def test_summary_needs_odd_class(self):
        with pytest.raises(ValidationError):
            deformation_summary("i/2", "1/2")

    def test_summary_needs_nonzero_t(self):
        with pytest.raises(ValidationError):
            deformation_summary("i", 0)
