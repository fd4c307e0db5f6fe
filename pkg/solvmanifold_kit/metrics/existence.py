"""
Existence and nonexistence of special Hermitian metrics on splitting-type structures.

Feasible cases carry a witness metric checked with ``metric_predicate``.
Infeasible cases carry an obstruction: for conditions linear in F, the image
of some w_j~j under the relevant operator lies outside the span of the images
of the other (1,1)-monomials (plus the allowed exact part), which every
positive metric violates because its w_j~j coefficient is nonzero.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..classification.classifier import ClassificationResult, classify, classify_many
from ..classification.tables import TABLE_REPRESENTATIVES
from ..domain.gaussian import ONE, GaussianRational, ScalarInput
from ..domain.matrix import contains_span
from ..geometry.coframe import Coframe, SplittingParams, splitting_coframe
from ..geometry.forms import Form, bidegree_basis, complex_monomial, coordinates, from_coordinates
from ..utilities.constants import (
    DEFAULT_EXISTENCE_SAMPLES,
    DEFAULT_SAMPLE_SEED,
    MARK_NO,
    MARK_UNKNOWN,
    MARK_YES,
    DegenerateStructureError,
    DifferentialKind,
    Family,
    InternalConsistencyError,
    MetricKind,
    ValidationError,
)
from .hermitian import HermitianMetric, fundamental_form, is_positive
from .predicates import metric_predicate

logger = logging.getLogger(__name__)

TABLE_KINDS: tuple[MetricKind, ...] = (
    MetricKind.KAHLER,
    MetricKind.HERMITIAN_SYMPLECTIC,
    MetricKind.SKT,
    MetricKind.ONE_GAUDUCHON,
    MetricKind.BALANCED,
    MetricKind.STRONGLY_GAUDUCHON,
)

TABLE_HEADERS: dict[MetricKind, str] = {
    MetricKind.KAHLER: "Kähler",
    MetricKind.HERMITIAN_SYMPLECTIC: "H-symplectic",
    MetricKind.SKT: "SKT",
    MetricKind.ONE_GAUDUCHON: "invariant 1-Gauduchon",
    MetricKind.BALANCED: "balanced",
    MetricKind.STRONGLY_GAUDUCHON: "strongly Gauduchon",
}

# One structure per algebra; s6 uses |A| = |B| with Delta = 0.
REPRESENTATIVES: dict[int, SplittingParams] = {
    1: SplittingParams.kt(1),
    2: SplittingParams.c2(1, -1, 0),
    3: SplittingParams.c2("i", "i", 1),
    4: SplittingParams.c2(-1, -1, 1),
    5: SplittingParams.c2("-1+2*i", "-1+2*i", 1),
    6: SplittingParams.c2("1/2+3*i/2", "-3/2+i/2", 1),
    7: SplittingParams.c2("1/2", "-1/2", 1),
    8: SplittingParams.c2("i", -1, 1),
    9: SplittingParams.c2(1, 1, 1),
    10: SplittingParams.c2("-1+i/2", "i/2", 1),
    11: SplittingParams.c2("-1/4", "-3/4", 1),
    12: SplittingParams.c2(0, -1, 1),
}

# Kodaira-Thurston surface: d w1 = 0, d w2 = w11~
KT_SURFACE = Coframe(
    [Form.zero(), complex_monomial([1], [1], 2, ONE)], name="Kodaira-Thurston surface"
)


@dataclass(frozen=True)
class ExistenceCertificate:
    """Outcome of ``exists_metric``: a checked witness, or the obstruction used."""

    kind: MetricKind
    params: SplittingParams
    feasible: bool
    witness: HermitianMetric | None = None
    obstruction: str | None = None
    certified: bool = True

    def __post_init__(self) -> None:
        if self.feasible and self.witness is None:
            raise ValueError("Feasible certificate needs a witness")
        if not self.feasible and not self.obstruction:
            raise ValueError("Infeasible certificate needs an obstruction")

    @property
    def mark(self) -> str:
        return MARK_YES if self.feasible else MARK_NO

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "params": self.params.to_dict(),
            "feasible": self.feasible,
            "witness": self.witness.to_dict() if self.witness else None,
            "obstruction": self.obstruction,
            "certified": self.certified,
        }


def _diagonal_obstruction(
    cf: Coframe, operator: Callable[[Form], Form], exact: Sequence[Form] = ()
) -> int | None:
    """
    1-based j such that operator(w_j~j) is outside the span of operator(other
    (1,1)-monomials) and ``exact``; None when no diagonal term is isolated.
    """
    basis = bidegree_basis(cf.n, 1, 1)
    images = [operator(Form({key: ONE})) for key in basis]
    support = sorted({key for form in [*images, *exact] for key, _ in form.items()})
    if not support:
        return None
    vectors = [coordinates(form, support) for form in images]
    exact_vectors = [coordinates(form, support) for form in exact]
    for j in range(cf.n):
        diagonal = basis.index((j, cf.n + j))
        others = [v for i, v in enumerate(vectors) if i != diagonal] + exact_vectors
        if not contains_span(others, [vectors[diagonal]], len(support)):
            return j + 1
    return None


def _hs_exact_part(cf: Coframe) -> list[Form]:
    """∂beta over the (0,2)-forms beta with ∂̄beta = 0."""
    source = bidegree_basis(cf.n, 0, 2)
    kernel = cf.operator_matrix(DifferentialKind.DELBAR, 0, 2).kernel_basis()
    return [cf.del_(from_coordinates(vec, source)) for vec in kernel]


def _sg_exact_part(cf: Coframe) -> list[Form]:
    """∂̄ of the (n, n-2)-forms."""
    return [cf.delbar(Form({key: ONE})) for key in bidegree_basis(cf.n, cf.n, cf.n - 2)]


def _linear_obstruction(
    kind: MetricKind,
    cf: Coframe,
    operator: Callable[[Form], Form],
    name: str,
    exact: Sequence[Form] = (),
) -> tuple[str, bool]:
    j = _diagonal_obstruction(cf, operator, exact)
    if j is None:
        return f"{kind}: no isolated diagonal term for {name}", False
    modulo = " modulo the allowed exact part" if exact else ""
    return (
        f"{name}(w{j}~{j}) is independent of {name} of the other (1,1)-monomials{modulo}; "
        f"the w{j}~{j} coefficient of a positive metric is nonzero",
        True,
    )


def _top_coefficient(form: Form, n: int) -> Any:
    return form.coefficient(tuple(range(2 * n)))


def _one_gauduchon_obstruction(cf: Coframe) -> tuple[str, bool]:
    """
    On the C2 family ∂∂̄F ∧ F depends on the metric only through r^2 s^2 and
    |u|^2; its top coefficient a r^2 s^2 + b |u|^2 is recovered from two metrics.
    """

    def top(m: HermitianMetric) -> Any:
        f = fundamental_form(m, cf.n)
        return _top_coefficient(cf.del_(cf.delbar(f)).wedge(f), cf.n)

    a = GaussianRational.coerce(top(HermitianMetric.identity()))
    with_u = GaussianRational.coerce(top(HermitianMetric.normalized(u=Fraction(1, 2))))
    b = (with_u - a) * 4
    if a and a.is_real() and b.is_real() and a.re * b.re >= 0:
        return (
            f"top coefficient of ∂∂̄F∧F is ({a}) r^2 s^2 + ({b}) |u|^2, "
            "never zero for a positive metric",
            True,
        )
    return "invariant 1-Gauduchon requires A + conj(B) = 0", False


def _witnessed(
    kind: MetricKind, params: SplittingParams, cf: Coframe, m: HermitianMetric
) -> ExistenceCertificate:
    if not metric_predicate(kind, m, cf):
        raise InternalConsistencyError(f"Witness {m} fails {kind} on {params}")
    return ExistenceCertificate(kind, params, True, witness=m)


def _infeasible(
    kind: MetricKind, params: SplittingParams, reason: str, detail: tuple[str, bool]
) -> ExistenceCertificate:
    text, certified = detail
    if not certified:
        logger.warning(f"No exact obstruction found for {kind} on {params}; using the characterization")
    return ExistenceCertificate(kind, params, False, obstruction=f"{reason}; {text}", certified=certified)


def _exists_kt(kind: MetricKind, params: SplittingParams, cf: Coframe) -> ExistenceCertificate:
    if kind in (MetricKind.SKT, MetricKind.ONE_GAUDUCHON, MetricKind.GAUDUCHON):
        return _witnessed(kind, params, cf, HermitianMetric.identity())
    surface = KT_SURFACE
    match kind:
        case MetricKind.BALANCED:
            detail = _linear_obstruction(kind, surface, surface.d, "d")
            reason = "balanced reduces to Kähler on the Kodaira-Thurston surface"
        case MetricKind.STRONGLY_GAUDUCHON:
            detail = _linear_obstruction(kind, surface, surface.del_, "∂", _sg_exact_part(surface))
            reason = "strongly Gauduchon reduces to ∂F being ∂̄-exact on the Kodaira-Thurston surface"
        case MetricKind.KAHLER:
            detail = _linear_obstruction(kind, cf, cf.d, "d")
            reason = "Kähler needs dF = 0"
        case _:
            detail = _linear_obstruction(kind, cf, cf.delbar, "∂̄", _hs_exact_part(cf))
            reason = "Hermitian-symplectic needs ∂̄F = ∂beta with ∂̄beta = 0"
    return _infeasible(kind, params, reason, detail)


def _exists_c2(kind: MetricKind, params: SplittingParams, cf: Coframe) -> ExistenceCertificate:
    always = (MetricKind.BALANCED, MetricKind.STRONGLY_GAUDUCHON, MetricKind.GAUDUCHON)
    if kind in always or params.A + params.B.conjugate() == 0:
        # diagonal metric: Kähler when A + conj(B) = 0, balanced always
        return _witnessed(kind, params, cf, HermitianMetric.identity())
    reason = f"{kind} requires A + conj(B) = 0, here {params.A + params.B.conjugate()}"
    match kind:
        case MetricKind.KAHLER:
            detail = _linear_obstruction(kind, cf, cf.d, "d")
        case MetricKind.SKT:
            detail = _linear_obstruction(kind, cf, lambda f: cf.del_(cf.delbar(f)), "∂∂̄")
        case MetricKind.HERMITIAN_SYMPLECTIC:
            detail = _linear_obstruction(kind, cf, cf.delbar, "∂̄", _hs_exact_part(cf))
            if not detail[1]:
                # Hermitian-symplectic implies SKT
                detail = _linear_obstruction(kind, cf, lambda f: cf.del_(cf.delbar(f)), "∂∂̄")
        case _:
            detail = _one_gauduchon_obstruction(cf)
    return _infeasible(kind, params, reason, detail)


def exists_metric(kind: MetricKind, params: SplittingParams) -> ExistenceCertificate:
    """Decide whether the splitting-type structure admits an invariant metric of ``kind``."""
    if params.family == Family.KT and params.eps == 0:
        raise DegenerateStructureError("KT family with eps=0 is not of splitting type")
    cf = splitting_coframe(params)
    if params.family == Family.KT:
        certificate = _exists_kt(kind, params, cf)
    else:
        certificate = _exists_c2(kind, params, cf)
    logger.info(f"{kind} on {params}: {'feasible' if certificate.feasible else 'infeasible'}")
    return certificate


# Kähler and SKT families; r = s = 1 throughout.


@dataclass(frozen=True)
class FamilyMember:
    """A structure J of a named family together with one metric F of it."""

    case: str
    params: SplittingParams
    coframe: Coframe
    metric: HermitianMetric


def _family_params(case: str, A: ScalarInput | None) -> SplittingParams:
    suffix = case.split(".")[-1].lower()
    match suffix:
        case "i":
            return SplittingParams.c2(1, -1, 0)
        case "ii":
            a = GaussianRational.coerce("i" if A is None else A)
            if a.im == 0:
                raise ValidationError(f"{case} needs Im A != 0, got: {a}")
            return SplittingParams.c2(a, -a.conjugate(), 1)
        case "iii":
            a = GaussianRational.coerce(2 if A is None else A)
            if not a.is_real() or a in (0, -1):
                raise ValidationError(f"{case} needs A real with A != 0, -1, got: {a}")
            return SplittingParams.c2(a, -a, 1)
        case "iv":
            return SplittingParams.c2(-1, 1, 1)
    raise ValidationError(f"Unknown family case: {case}")


def _member(case: str, params: SplittingParams, metric: HermitianMetric) -> FamilyMember:
    if not is_positive(metric):
        raise ValidationError(f"{case} metric {metric} is not positive-definite")
    return FamilyMember(case, params, splitting_coframe(params), metric)


def _require_zero(case: str, **coefficients: ScalarInput) -> None:
    for name, value in coefficients.items():
        if GaussianRational.coerce(value):
            raise ValidationError(f"{case} forces {name} = 0, got: {value}")


def kahler_family(
    case: str,
    A: ScalarInput | None = None,
    t2: ScalarInput = 1,
    u: ScalarInput = 0,
    v: ScalarInput = 0,
) -> FamilyMember:
    """Member of (K.i)-(K.iv): F = (t2, 0, v, 0), (t2, 0, 0, 0) or (t2, u, 0, 0)."""
    params = _family_params(case, A)
    suffix = case.split(".")[-1].lower()
    if suffix == "i":
        _require_zero(case, u=u)
    elif suffix == "iv":
        _require_zero(case, v=v)
    else:
        _require_zero(case, u=u, v=v)
    return _member(case, params, HermitianMetric.normalized(t2, u, v, 0))


def skt_family(
    case: str,
    A: ScalarInput | None = None,
    t2: ScalarInput = 1,
    u: ScalarInput = 0,
    v: ScalarInput = 0,
    z: ScalarInput = 0,
) -> FamilyMember:
    """Member of (SKT.i)-(SKT.iv): F = (t2, 0, v, z), or (t2, u, v, z) for (SKT.iv)."""
    params = _family_params(case, A)
    if case.split(".")[-1].lower() != "iv":
        _require_zero(case, u=u)
    return _member(case, params, HermitianMetric.normalized(t2, u, v, z))


# Existence table and corollaries

# Marks of the reference table: Kähler, H-symplectic, SKT, 1-Gauduchon, balanced, strongly Gauduchon
REFERENCE_MARKS: dict[int, str] = {
    1: "−−✓✓−−",
    2: "✓✓✓✓✓✓",
    3: "✓✓✓✓✓✓",
    7: "✓✓✓✓✓✓",
    **{index: "−−−−✓✓" for index in (4, 5, 6, 8, 9, 10, 11, 12)},
}


def existence_sample(
    count: int = DEFAULT_EXISTENCE_SAMPLES, seed: int = DEFAULT_SAMPLE_SEED, height: int = 3
) -> list[ClassificationResult]:
    """Per-algebra representatives, every decision-row representative and a seeded sweep, classified."""
    results = []
    for index, params in REPRESENTATIVES.items():
        result = classify(params)
        if result.label.index != index:
            raise InternalConsistencyError(f"Representative {params} classifies as {result.label}, not s{index}")
        results.append(result)
    results.extend(classify(params) for _, _, params in TABLE_REPRESENTATIVES)
    results.extend(classify_many(count, seed, height))
    return results


@dataclass(frozen=True)
class ExistenceCell:
    """One metric kind over every sampled structure of an algebra."""

    kind: MetricKind
    certificates: list[ExistenceCertificate]

    @property
    def feasible(self) -> bool:
        return any(c.feasible for c in self.certificates)

    @property
    def mark(self) -> str:
        if self.feasible:
            return MARK_YES
        if all(c.certified for c in self.certificates):
            return MARK_NO
        return MARK_UNKNOWN

    def to_dict(self) -> dict[str, Any]:
        witness = next((c for c in self.certificates if c.feasible), None)
        return {
            "kind": str(self.kind),
            "mark": self.mark,
            "structures": len(self.certificates),
            "witness": witness.to_dict() if witness else None,
            "obstructions": sorted({c.obstruction for c in self.certificates if c.obstruction}),
        }


@dataclass(frozen=True)
class ExistenceRow:
    index: int
    structures: list[SplittingParams]
    cells: dict[MetricKind, ExistenceCell]

    @property
    def name(self) -> str:
        return f"s{self.index}"

    def marks(self) -> list[str]:
        return [self.cells[kind].mark for kind in TABLE_KINDS]

    def matches_reference(self) -> bool:
        return "".join(self.marks()) == REFERENCE_MARKS.get(self.index)

    def to_dict(self) -> dict[str, Any]:
        return {
            "algebra": self.name,
            "structures": [str(p) for p in self.structures],
            "cells": {str(kind): self.cells[kind].to_dict() for kind in TABLE_KINDS},
            "matches_reference": self.matches_reference(),
        }


@dataclass(frozen=True)
class ExistenceTable:
    rows: list[ExistenceRow] = field(default_factory=list)

    @property
    def headers(self) -> list[str]:
        return ["algebra", *(TABLE_HEADERS[kind] for kind in TABLE_KINDS)]

    @property
    def matches_reference(self) -> bool:
        return bool(self.rows) and all(row.matches_reference() for row in self.rows)

    def structures(self) -> Iterator[tuple[SplittingParams, dict[MetricKind, ExistenceCertificate]]]:
        """Each sampled structure with its certificates, row by row."""
        for row in self.rows:
            for position, params in enumerate(row.structures):
                yield params, {kind: cell.certificates[position] for kind, cell in row.cells.items()}

    def to_dict(self) -> dict[str, Any]:
        return {
            "headers": self.headers,
            "rows": [row.to_dict() for row in self.rows],
            "matches_reference": self.matches_reference,
        }


def existence_table(results: Sequence[ClassificationResult] | None = None) -> ExistenceTable:
    """
    Group classified structures by algebra and run every table kind on each.

    A cell is ✓ when some structure of the algebra has a witness and − only
    when every structure is certified infeasible.
    """
    groups: dict[int, list[SplittingParams]] = defaultdict(list)
    for result in existence_sample() if results is None else results:
        if result.params not in groups[result.label.index]:
            groups[result.label.index].append(result.params)
    rows = []
    for index, structures in sorted(groups.items()):
        cells = {
            kind: ExistenceCell(kind, [exists_metric(kind, params) for params in structures])
            for kind in TABLE_KINDS
        }
        rows.append(ExistenceRow(index, structures, cells))
        logger.debug(f"s{index}: {len(structures)} structures")
    logger.info(f"Existence table over {sum(len(s) for s in groups.values())} structures")
    return ExistenceTable(rows)


@dataclass(frozen=True)
class CorollaryReport:
    """SKT + balanced implies Kähler over a sample set, and the s1 ∂∂̄ witness."""

    checked: int
    violations: list[SplittingParams]
    s1_witness: str
    s1_witness_holds: bool

    @property
    def holds(self) -> bool:
        return not self.violations and self.s1_witness_holds

    def to_dict(self) -> dict[str, Any]:
        return {
            "checked": self.checked,
            "violations": [str(p) for p in self.violations],
            "s1_witness": self.s1_witness,
            "s1_witness_holds": self.s1_witness_holds,
            "holds": self.holds,
        }


def _s1_ddbar_witness() -> bool:
    """w11~ = d w2 = ∂(-conj w2) = ∂̄ w2 on the KT family, and it is not ∂∂̄-exact."""
    cf = splitting_coframe(SplittingParams.kt(1))
    target = cf.monomial([1], [1])
    w2, w2_bar = cf.generator(2), cf.generator(2, conjugate=True)
    exact = cf.d(w2) == target and cf.del_(-w2_bar) == target and cf.delbar(w2) == target
    # ∂∂̄ of functions is zero for invariant forms
    return exact and not target.is_zero() and cf.del_(cf.delbar(Form.constant(ONE))).is_zero()


def corollary_checks(table: ExistenceTable | None = None) -> CorollaryReport:
    """Check SKT and balanced together force Kähler on every structure of the table."""
    source = existence_table() if table is None else table
    checked = 0
    violations = []
    for params, certificates in source.structures():
        checked += 1
        skt = certificates[MetricKind.SKT].feasible
        balanced = certificates[MetricKind.BALANCED].feasible
        if skt and balanced and not certificates[MetricKind.KAHLER].feasible:
            violations.append(params)
    witness_holds = _s1_ddbar_witness()
    return CorollaryReport(
        checked,
        violations,
        "w11~ = d w2 = ∂(-conj w2) = ∂̄ w2 is d-, ∂- and ∂̄-exact but not ∂∂̄-exact",
        witness_holds,
    )
