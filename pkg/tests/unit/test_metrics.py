"""
Unit tests for Hermitian metrics.

Tests for the fundamental form, positivity, the metric predicates and the
existence certificates on splitting-type structures.
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from solvmanifold_kit.classification import classify
from solvmanifold_kit.domain.gaussian import GaussianRational
from solvmanifold_kit.geometry.coframe import Coframe, SplittingParams, splitting_coframe
from solvmanifold_kit.metrics.existence import (
    REPRESENTATIVES,
    TABLE_KINDS,
    ExistenceCell,
    corollary_checks,
    existence_sample,
    existence_table,
    exists_metric,
    kahler_family,
    skt_family,
)
from solvmanifold_kit.metrics.hermitian import HermitianMetric, fundamental_form, is_positive
from solvmanifold_kit.metrics.predicates import (
    hermitian_symplectic_potential,
    metric_predicate,
    satisfied_kinds,
)
from solvmanifold_kit.utilities.constants import (
    MARK_NO,
    MARK_UNKNOWN,
    MARK_YES,
    IntegrabilityError,
    MetricKind,
    ValidationError,
)

HALF_I = GaussianRational(0, Fraction(1, 2))


class TestFundamentalForm:
    """Test cases for the (1,1)-form of a metric."""

    def test_identity_metric(self):
        """Identity metric is (i/2)(w11~ + w22~ + w33~)."""
        f = fundamental_form(HermitianMetric.identity())
        assert f.coefficient((0, 3)) == HALF_I
        assert f.coefficient((1, 4)) == HALF_I
        assert f.coefficient((2, 5)) == HALF_I
        assert len(f.keys()) == 3

    def test_off_diagonal_u(self):
        """2F contains u w12~ - conj(u) w21~."""
        u = GaussianRational(1, 1) / 4
        f = fundamental_form(HermitianMetric.normalized(u=u))
        assert f.coefficient((0, 4)) * 2 == u
        assert f.coefficient((1, 3)) * 2 == -u.conjugate()

    def test_normalized_sets_r_and_s(self):
        """Normalized metrics have r = s = 1."""
        m = HermitianMetric.normalized(t2=3, v="1/2")
        assert m.r2 == 1 and m.s2 == 1 and m.t2 == 3
        assert m.v == Fraction(1, 2)

    def test_nonpositive_diagonal_rejected(self):
        """Diagonal coefficients must be positive reals."""
        with pytest.raises(ValidationError):
            HermitianMetric(t2=Fraction(0))
        with pytest.raises(ValidationError):
            HermitianMetric.normalized(t2="i")


class TestPositivity:
    """Test cases for positive-definiteness."""

    def test_identity_is_positive(self):
        assert is_positive(HermitianMetric.identity())

    def test_large_u_fails(self):
        """r^2 s^2 > |u|^2 fails for u = 2."""
        assert not is_positive(HermitianMetric.normalized(u=2))

    def test_quartic_condition(self):
        """r = s = t = 1, u = v = z = 1/2 satisfies 1 > 3/4."""
        half = Fraction(1, 2)
        assert is_positive(HermitianMetric.normalized(1, half, half, half))

    def test_quartic_condition_can_fail_alone(self):
        """Each pairwise inequality holds but the determinant condition does not."""
        m = HermitianMetric.normalized(1, "3/5", "3/5", "3/5*i")
        assert not is_positive(m)


class TestMetricPredicates:
    """Test cases for the seven metric conditions."""

    def test_k_i_is_kahler(self):
        """J = (1, -1, 0) with F = (t2, 0, v, 0) is Kähler."""
        cf = splitting_coframe(SplittingParams.c2(1, -1, 0))
        m = HermitianMetric.normalized(2, 0, GaussianRational(1, 1) / 2, 0)
        assert metric_predicate(MetricKind.KAHLER, m, cf)

    def test_kt_skt_iff_u_zero(self):
        """On the KT family SKT holds exactly when u = 0."""
        cf = splitting_coframe(SplittingParams.kt(1))
        assert metric_predicate(MetricKind.SKT, HermitianMetric.normalized(1, 0, "1/2", "1/3"), cf)
        with_u = HermitianMetric.normalized(u="1/2")
        assert not metric_predicate(MetricKind.SKT, with_u, cf)
        assert not metric_predicate(MetricKind.ONE_GAUDUCHON, with_u, cf)

    @pytest.mark.parametrize("index", [2, 4, 6, 9, 10, 12])
    def test_t2_u_metrics_are_balanced(self, index):
        """(t2, u, 0, 0) is balanced for every C2 structure."""
        cf = splitting_coframe(REPRESENTATIVES[index])
        m = HermitianMetric.normalized(2, GaussianRational(1, -1) / 3, 0, 0)
        assert metric_predicate(MetricKind.BALANCED, m, cf)

    def test_strongly_gauduchon_not_balanced(self):
        """With eps = 1, F = (t2, 0, v, z) and v != 0 is sG but not balanced."""
        cf = splitting_coframe(SplittingParams.c2(1, 1, 1))
        m = HermitianMetric.normalized(1, 0, "1/2", 0)
        assert metric_predicate(MetricKind.STRONGLY_GAUDUCHON, m, cf)
        assert not metric_predicate(MetricKind.BALANCED, m, cf)

    def test_hermitian_symplectic_potential_on_kahler(self):
        """A Kähler metric is Hermitian-symplectic with beta = 0."""
        cf = splitting_coframe(SplittingParams.c2("i", "i", 1))
        beta = hermitian_symplectic_potential(HermitianMetric.identity(), cf)
        assert beta is not None
        assert beta.is_zero()

    def test_skt_with_z_is_not_kahler(self):
        """SKT structures with z != 0 are not Kähler."""
        member = skt_family("SKT.ii", A="2+i", z="1/2")
        kinds = satisfied_kinds(member.metric, member.coframe)
        assert MetricKind.SKT in kinds
        assert MetricKind.HERMITIAN_SYMPLECTIC in kinds
        assert MetricKind.KAHLER not in kinds

    def test_non_positive_metric_rejected(self):
        cf = splitting_coframe(SplittingParams.kt(1))
        with pytest.raises(ValidationError):
            metric_predicate(MetricKind.SKT, HermitianMetric.normalized(u=2), cf)

    def test_non_integrable_coframe_rejected(self):
        """Metric conditions need ∂ and ∂̄."""
        kt = splitting_coframe(SplittingParams.kt(1))
        cf = Coframe([kt.monomial([], [1, 2]), kt.equations[1], kt.equations[2]])
        with pytest.raises(IntegrabilityError):
            metric_predicate(MetricKind.KAHLER, HermitianMetric.identity(), cf)


class TestFamilies:
    """Test cases for the Kähler and SKT families."""

    @pytest.mark.parametrize(
        "case,kwargs",
        [
            ("K.i", {"t2": 2, "v": "1/2"}),
            ("K.ii", {"A": "1+2*i"}),
            ("K.iii", {"A": "-1/3", "t2": 5}),
            ("K.iv", {"u": "i/2"}),
        ],
    )
    def test_kahler_members(self, case, kwargs):
        member = kahler_family(case, **kwargs)
        assert metric_predicate(MetricKind.KAHLER, member.metric, member.coframe)

    @pytest.mark.parametrize(
        "case,kwargs",
        [
            ("SKT.i", {"v": "1/2", "z": "i/3"}),
            ("SKT.ii", {"A": "i", "v": "1/3", "z": "1/3"}),
            ("SKT.iii", {"A": 3, "z": "1/2"}),
            ("SKT.iv", {"u": "1/3", "v": "1/3", "z": "i/3"}),
        ],
    )
    def test_skt_members(self, case, kwargs):
        member = skt_family(case, **kwargs)
        assert metric_predicate(MetricKind.SKT, member.metric, member.coframe)
        assert metric_predicate(MetricKind.ONE_GAUDUCHON, member.metric, member.coframe)

    def test_perturbing_u_breaks_skt(self):
        """u != 0 leaves (SKT.i)."""
        member = skt_family("SKT.i", v="1/2")
        perturbed = member.metric.with_coefficients(u=GaussianRational(Fraction(1, 3)))
        assert not metric_predicate(MetricKind.SKT, perturbed, member.coframe)

    def test_forced_coefficients(self):
        with pytest.raises(ValidationError):
            kahler_family("K.ii", u="1/2")
        with pytest.raises(ValidationError):
            skt_family("SKT.iii", u="1/2")
        with pytest.raises(ValidationError):
            kahler_family("K.iii", A=-1)
        with pytest.raises(ValidationError):
            kahler_family("K.ii", A=3)


class TestExistence:
    """Test cases for existence certificates."""

    def test_s1_balanced_infeasible(self):
        certificate = exists_metric(MetricKind.BALANCED, SplittingParams.kt(1))
        assert not certificate.feasible
        assert certificate.certified
        assert certificate.obstruction

    def test_s1_strongly_gauduchon_infeasible(self):
        certificate = exists_metric(MetricKind.STRONGLY_GAUDUCHON, SplittingParams.kt(1))
        assert not certificate.feasible
        assert certificate.certified

    def test_s1_skt_feasible(self):
        certificate = exists_metric(MetricKind.SKT, SplittingParams.kt(1))
        assert certificate.feasible
        assert certificate.witness is not None and certificate.witness.u == 0

    def test_s3_kahler_witness(self):
        """J = (A, -conj A, 1) with Im A != 0 carries the diagonal Kähler metric."""
        certificate = exists_metric(MetricKind.KAHLER, SplittingParams.c2("2+i", "-2+i", 1))
        assert certificate.feasible
        assert certificate.witness == HermitianMetric.identity()

    @pytest.mark.parametrize("kind", [MetricKind.KAHLER, MetricKind.SKT, MetricKind.ONE_GAUDUCHON])
    def test_skt_obstruction_when_unbalanced(self, kind):
        """A + conj(B) != 0 rules out SKT, Kähler and 1-Gauduchon."""
        certificate = exists_metric(kind, SplittingParams.c2(1, 1, 1))
        assert not certificate.feasible
        assert certificate.certified
        assert "A + conj(B) = 0" in (certificate.obstruction or "")

    def test_hermitian_symplectic_obstruction(self):
        certificate = exists_metric(MetricKind.HERMITIAN_SYMPLECTIC, SplittingParams.c2(2, 3, 1))
        assert not certificate.feasible
        assert certificate.certified

    def test_gauduchon_always_feasible(self):
        for params in REPRESENTATIVES.values():
            assert exists_metric(MetricKind.GAUDUCHON, params).feasible

    def test_certificate_to_dict(self):
        data = exists_metric(MetricKind.BALANCED, SplittingParams.c2(1, 1, 1)).to_dict()
        assert data["feasible"] is True
        assert data["witness"]["t2"] == "1"


class TestExistenceTable:
    """Test cases for the 12 x 6 existence table over grouped samples."""

    @pytest.fixture(scope="class")
    def sample(self):
        return existence_sample(count=8, seed=3, height=3)

    @pytest.fixture(scope="class")
    def table(self, sample):
        return existence_table(sample)

    def test_rows_follow_catalog(self, table):
        assert [row.index for row in table.rows] == list(range(1, 13))
        assert all(row.structures for row in table.rows)

    def test_structures_are_grouped_by_label(self, table, sample):
        by_index = {row.index: row.structures for row in table.rows}
        for result in sample:
            assert result.params in by_index[result.label.index]
        assert sum(len(row.structures) for row in table.rows) == len({r.params for r in sample})

    def test_marks(self, table):
        expected_kahler = {2, 3, 7}
        for row in table.rows:
            index = row.index
            marks = row.marks()
            if index == 1:
                assert marks == ["−", "−", "✓", "✓", "−", "−"]
            elif index in expected_kahler:
                assert marks == ["✓"] * len(TABLE_KINDS)
            else:
                assert marks == ["−", "−", "−", "−", "✓", "✓"]
        assert table.matches_reference

    def test_several_structures_per_algebra(self, table):
        """s12 is reached from several rows; each structure is judged on its own."""
        row = next(row for row in table.rows if row.index == 12)
        assert len(row.structures) > 1
        for kind in TABLE_KINDS:
            assert len(row.cells[kind].certificates) == len(row.structures)

    def test_one_witness_suffices(self):
        """s7 with a Kähler structure next to a second s7 structure still gets ✓."""
        results = [classify(SplittingParams.c2(1, -1, 1)), classify(SplittingParams.c2("1/2", "-1/2", 1))]
        table = existence_table(results)
        (row,) = table.rows
        assert row.index == 7
        assert row.cells[MetricKind.KAHLER].mark == MARK_YES
        assert row.cells[MetricKind.KAHLER].to_dict()["witness"] is not None

    def test_infeasible_only_when_every_structure_is_certified(self):
        certificate = exists_metric(MetricKind.KAHLER, SplittingParams.c2(2, -1, 1))
        assert certificate.certified
        uncertified = replace(certificate, certified=False)
        assert ExistenceCell(MetricKind.KAHLER, [certificate]).mark == MARK_NO
        assert ExistenceCell(MetricKind.KAHLER, [certificate, uncertified]).mark == MARK_UNKNOWN

    def test_headers(self, table):
        assert table.headers[0] == "algebra"
        assert "invariant 1-Gauduchon" in table.headers

    def test_corollary(self, table):
        report = corollary_checks(table)
        assert report.holds
        assert report.checked == sum(len(row.structures) for row in table.rows)
        assert report.to_dict()["violations"] == []
