"""
Reference cohomology tables of the Nakamura structures and their recomputation.

Labels follow ``complexes``: ``~k`` is phi~^k, ``bk`` the conjugate of phi^k,
``b~k`` the conjugate of phi~^k and ``b3`` = conj(phi^3) = phi~^3.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Final

from ..cohomology.ddbar import ddbar_lemma
from ..cohomology.double_complex import Bidegree, DoubleComplex
from ..cohomology.representatives import verify_representatives
from ..cohomology.theories import cohomology
from ..domain.gaussian import ScalarInput
from ..utilities.constants import COMPLEX_DIMENSION, Theory, ValidationError
from .characters import LatticeClass, NakamuraParams, lattice_class
from .complexes import build_complexes

logger = logging.getLogger(__name__)

BETTI_NUMBERS: Final[tuple[int, ...]] = (1, 2, 5, 8, 5, 2, 1)

BIDEGREES: Final[tuple[Bidegree, ...]] = tuple(
    (p, k - p)
    for k in range(2 * COMPLEX_DIMENSION + 1)
    for p in range(COMPLEX_DIMENSION, -1, -1)
    if 0 <= k - p <= COMPLEX_DIMENSION
)

Representatives = Mapping[Bidegree, tuple[str, ...]]


def _label(*tokens: str) -> str:
    return "phi^" + "".join(tokens)


def _full_exterior_labels() -> dict[Bidegree, tuple[str, ...]]:
    holo, anti = ("1", "2", "3"), ("~1", "~2", "b3")
    labels: dict[Bidegree, tuple[str, ...]] = {}
    for p, q in BIDEGREES:
        labels[(p, q)] = tuple(
            _label(*left, *right) if left or right else "1"
            for left in combinations(holo, p)
            for right in combinations(anti, q)
        )
    return labels


def _shared(**rows: tuple[str, ...]) -> dict[Bidegree, tuple[str, ...]]:
    return {(int(key[1]), int(key[2])): value for key, value in rows.items()}


# Rows common to the i/(2k) and generic columns of the Dolbeault table.
_COMMON_ROWS = _shared(
    h00=("1",),
    h10=("phi^3",),
    h01=("phi^b3",),
    h20=("phi^12",),
    h02=("phi^~1~2",),
    h30=("phi^123",),
    h03=("phi^~1~2b3",),
    h31=("phi^123b3",),
    h13=("phi^3~1~2b3",),
    h32=("phi^123~1~2",),
    h23=("phi^12~1~2b3",),
    h33=("phi^123~1~2b3",),
)

# The t != 0 Dolbeault and Bott-Chern representatives coincide with the generic column.
_GENERIC_ROWS = {
    **_COMMON_ROWS,
    **_shared(
        h11=("phi^1~2", "phi^2~1", "phi^3b3"),
        h21=("phi^12b3", "phi^13~2", "phi^23~1"),
        h12=("phi^1~2b3", "phi^2~1b3", "phi^3~1~2"),
        h22=("phi^12~1~2", "phi^13~2b3", "phi^23~1b3"),
    ),
}

_EVEN_ROWS = {
    **_COMMON_ROWS,
    **_shared(
        h11=("phi^1~1", "phi^1~2", "phi^2~1", "phi^2~2", "phi^3b3"),
        h21=("phi^12b3", "phi^13~1", "phi^13~2", "phi^23~1", "phi^23~2"),
        h12=("phi^1~1b3", "phi^1~2b3", "phi^2~1b3", "phi^2~2b3", "phi^3~1~2"),
        h22=("phi^12~1~2", "phi^13~1b3", "phi^13~2b3", "phi^23~1b3", "phi^23~2b3"),
    ),
}

DOLBEAULT_TABLE: Final[dict[LatticeClass, dict[Bidegree, tuple[str, ...]]]] = {
    LatticeClass.ODD: _full_exterior_labels(),
    LatticeClass.EVEN: _EVEN_ROWS,
    LatticeClass.GENERIC: _GENERIC_ROWS,
}

DEFORMED_REPRESENTATIVES: Final[dict[Bidegree, tuple[str, ...]]] = _GENERIC_ROWS

BOTT_CHERN_REPRESENTATIVES_T0: Final[dict[Bidegree, tuple[str, ...]]] = {
    **_COMMON_ROWS,
    **_shared(
        h20=("phi^12", "phi^13", "phi^23"),
        h11=(
            "phi^1~2", "phi^2~1", "phi^3~1", "phi^3~2", "phi^3b3", "phi^b~1b3", "phi^b~2b3",
        ),
        h02=("phi^~1~2", "phi^b1b3", "phi^b2b3"),
        h21=(
            "phi^12b3", "phi^13~1", "phi^13~2", "phi^13b3", "phi^23~1", "phi^23~2",
            "phi^23b3", "phi^b~13b3", "phi^b~23b3",
        ),
        h12=(
            "phi^1~2b3", "phi^2~1b3", "phi^3~1~2", "phi^3~1b3", "phi^3~2b3",
            "phi^b~1b1b3", "phi^3b1b3", "phi^b~2b2b3", "phi^3b2b3",
        ),
        h31=("phi^123~1", "phi^123~2", "phi^123b3"),
        h22=(
            "phi^12~1~2", "phi^13~1~2", "phi^13~1b3", "phi^13~2b3", "phi^23~1~2",
            "phi^23~1b3", "phi^23~2b3", "phi^b~1b~2b1b3", "phi^b~1b~2b2b3",
            "phi^b~13b1b3", "phi^b~23b2b3",
        ),
        h13=("phi^3~1~2b3", "phi^b~1b1b2b3", "phi^b~2b1b2b3"),
        h32=(
            "phi^123~1~2", "phi^123~1b3", "phi^123~2b3", "phi^b~1b~23b1b3", "phi^b~1b~23b2b3",
        ),
        h23=(
            "phi^12~1~2b3", "phi^13~1~2b3", "phi^23~1~2b3", "phi^b~13b1b2b3", "phi^b~23b1b2b3",
        ),
    ),
}

# Generators of C beyond B for C = i/(2k+1); they do not depend on t.
C_EXTRA_GENERATORS: Final[dict[Bidegree, tuple[str, ...]]] = _shared(
    h10=("phi^b~1", "phi^b~2"),
    h01=("phi^b1", "phi^b2"),
    h20=("phi^b~13", "phi^b~23"),
    h11=("phi^b~1b1", "phi^3b1", "phi^b~2b2", "phi^3b2", "phi^b~1b3", "phi^b~2b3"),
    h02=("phi^b1b3", "phi^b2b3"),
    h21=(
        "phi^b~1b~2b1", "phi^b~13b1", "phi^b~1b~2b2", "phi^b~23b2", "phi^b~13b3", "phi^b~23b3",
    ),
    h12=("phi^b~1b1b2", "phi^b~2b1b2", "phi^b~1b1b3", "phi^3b1b3", "phi^b~2b2b3", "phi^3b2b3"),
    h31=("phi^b~1b~23b1", "phi^b~1b~23b2"),
    h22=(
        "phi^b~13b1b2", "phi^b~23b1b2", "phi^b~1b~2b1b3", "phi^b~1b~2b2b3",
        "phi^b~13b1b3", "phi^b~23b2b3",
    ),
    h13=("phi^b~1b1b2b3", "phi^b~2b1b2b3"),
    h32=("phi^b~1b~23b1b3", "phi^b~1b~23b2b3"),
    h23=("phi^b~13b1b2b3", "phi^b~23b1b2b3"),
)

# (h_∂̄ at t = 0, h_BC at t = 0, h_∂̄ at t != 0, h_BC at t != 0) for X_k.
DEFORMATION_SUMMARY: Final[dict[Bidegree, tuple[int, int, int, int]]] = {
    (0, 0): (1, 1, 1, 1),
    (1, 0): (3, 1, 1, 1),
    (0, 1): (3, 1, 1, 1),
    (2, 0): (3, 3, 1, 1),
    (1, 1): (9, 7, 3, 3),
    (0, 2): (3, 3, 1, 1),
    (3, 0): (1, 1, 1, 1),
    (2, 1): (9, 9, 3, 3),
    (1, 2): (9, 9, 3, 3),
    (0, 3): (1, 1, 1, 1),
    (3, 1): (3, 3, 1, 1),
    (2, 2): (9, 11, 3, 3),
    (1, 3): (3, 3, 1, 1),
    (3, 2): (3, 5, 1, 1),
    (2, 3): (3, 5, 1, 1),
    (3, 3): (1, 1, 1, 1),
}


def reference_representatives(params: NakamuraParams, theory: Theory) -> Representatives | None:
    """Listed representatives for (C, t), or None where no table lists them."""
    cls = lattice_class(params.C)
    if theory == Theory.DOLBEAULT:
        return DEFORMED_REPRESENTATIVES if params.t else DOLBEAULT_TABLE[cls]
    if theory == Theory.BOTT_CHERN and cls == LatticeClass.ODD:
        return DEFORMED_REPRESENTATIVES if params.t else BOTT_CHERN_REPRESENTATIVES_T0
    return None


def expected_dimension(params: NakamuraParams, theory: Theory, key: Any) -> int | None:
    if theory == Theory.DE_RHAM:
        return BETTI_NUMBERS[key]
    listed = reference_representatives(params, theory)
    return len(listed[key]) if listed is not None else None


@dataclass(frozen=True)
class TableCell:
    """One computed dimension with its reference value and listed generators."""

    params: NakamuraParams
    theory: Theory
    key: Any
    dim: int
    expected: int | None = None
    generators: tuple[str, ...] = ()

    @property
    def matches(self) -> bool:
        return self.expected is None or self.expected == self.dim

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "C": str(self.params.C),
            "t": str(self.params.t),
            "theory": str(self.theory),
        }
        if self.theory == Theory.DE_RHAM:
            data["degree"] = self.key
        else:
            data["bidegree"] = list(self.key)
        data.update(dim=self.dim, expected=self.expected, generators=list(self.generators))
        return data


@dataclass(frozen=True)
class ParamsReport:
    """All cells for one (C, t) plus the ∂∂̄-lemma and representative checks."""

    params: NakamuraParams
    cells: tuple[TableCell, ...]
    ddbar: bool
    representatives_verified: dict[str, bool] = field(default_factory=dict)

    @property
    def matches(self) -> bool:
        return all(cell.matches for cell in self.cells) and all(
            self.representatives_verified.values()
        )

    def column(self, theory: Theory) -> dict[Any, int]:
        return {cell.key: cell.dim for cell in self.cells if cell.theory == theory}

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "ddbar_lemma": self.ddbar,
            "representatives_verified": dict(sorted(self.representatives_verified.items())),
            "matches_reference": self.matches,
            "cells": [cell.to_dict() for cell in self.cells],
        }


@dataclass(frozen=True)
class NakamuraTables:
    reports: tuple[ParamsReport, ...]

    @property
    def matches(self) -> bool:
        return all(report.matches for report in self.reports)

    def mismatches(self) -> list[TableCell]:
        return [cell for report in self.reports for cell in report.cells if not cell.matches]

    def to_dict(self) -> dict[str, Any]:
        return {
            "matches_reference": self.matches,
            "reports": [report.to_dict() for report in self.reports],
        }


def _forms(listed: Representatives) -> dict[Bidegree, list[dict[str, int]]]:
    return {bidegree: [{label: 1} for label in labels] for bidegree, labels in listed.items()}


def _cells(
    params: NakamuraParams, theory: Theory, dc: DoubleComplex, keys: Iterable[Any]
) -> list[TableCell]:
    table = cohomology(dc, theory)
    listed = reference_representatives(params, theory)
    return [
        TableCell(
            params,
            theory,
            key,
            table[key],
            expected_dimension(params, theory, key),
            listed[key] if listed is not None else (),
        )
        for key in keys
    ]


def params_report(params: NakamuraParams, verify: bool = True) -> ParamsReport:
    """
    Dolbeault from B, Bott-Chern and de Rham from C, the ∂∂̄-lemma on C.

    With ``verify`` the listed representatives are checked against the complexes.
    """
    b, c = build_complexes(params)
    cells = _cells(params, Theory.DOLBEAULT, b, BIDEGREES)
    cells += _cells(params, Theory.BOTT_CHERN, c, BIDEGREES)
    cells += _cells(params, Theory.DE_RHAM, c, range(2 * COMPLEX_DIMENSION + 1))
    verified: dict[str, bool] = {}
    if verify:
        for theory, dc in ((Theory.DOLBEAULT, b), (Theory.BOTT_CHERN, c)):
            listed = reference_representatives(params, theory)
            if listed is not None:
                verified[str(theory)] = verify_representatives(dc, theory, _forms(listed))
    report = ParamsReport(params, tuple(cells), ddbar_lemma(c), verified)
    if not report.matches:
        logger.warning(f"Nakamura tables for {params} differ from the reference data")
    return report


def nakamura_tables(
    C_values: Sequence[ScalarInput], t_values: Sequence[ScalarInput] = (), verify: bool = True
) -> NakamuraTables:
    """
    Reports for every C at t = 0, and for every C = i/(2k+1) at every t.

    Nonzero t is skipped for the other lattice classes, where no deformation is defined.
    """
    reports = []
    for C in C_values:
        params = NakamuraParams.of(C)
        reports.append(params_report(params, verify))
        if lattice_class(params.C) != LatticeClass.ODD:
            continue
        for t in t_values:
            deformed = NakamuraParams.of(C, t)
            if deformed.t:
                reports.append(params_report(deformed, verify))
    return NakamuraTables(tuple(reports))


@dataclass(frozen=True)
class SummaryRow:
    bidegree: Bidegree
    computed: tuple[int, int, int, int]
    expected: tuple[int, int, int, int]

    @property
    def matches(self) -> bool:
        return self.computed == self.expected

    def to_dict(self) -> dict[str, Any]:
        return {
            "bidegree": list(self.bidegree),
            "computed": list(self.computed),
            "expected": list(self.expected),
        }


@dataclass(frozen=True)
class DeformationSummary:
    """h_∂̄ and h_BC of X_k at t = 0 against one t != 0, plus both ∂∂̄ verdicts."""

    C: str
    t: str
    rows: tuple[SummaryRow, ...]
    ddbar_t0: bool
    ddbar_t: bool

    @property
    def matches(self) -> bool:
        return all(row.matches for row in self.rows) and not self.ddbar_t0 and self.ddbar_t

    def to_dict(self) -> dict[str, Any]:
        return {
            "C": self.C,
            "t": self.t,
            "columns": ["dolbeault t=0", "bott_chern t=0", "dolbeault t", "bott_chern t"],
            "ddbar_lemma_t0": self.ddbar_t0,
            "ddbar_lemma_t": self.ddbar_t,
            "matches_reference": self.matches,
            "rows": [row.to_dict() for row in self.rows],
        }


def summarize_deformation(base: ParamsReport, deformed: ParamsReport) -> DeformationSummary:
    """Deformation summary from a t = 0 report and a t != 0 report of the same C."""
    if base.params.t or not deformed.params.t:
        raise ValidationError("The deformation summary needs one report at t = 0 and one at t != 0")
    if base.params.C != deformed.params.C:
        raise ValidationError(f"Reports for different C: {base.params.C}, {deformed.params.C}")
    columns = (
        base.column(Theory.DOLBEAULT),
        base.column(Theory.BOTT_CHERN),
        deformed.column(Theory.DOLBEAULT),
        deformed.column(Theory.BOTT_CHERN),
    )
    rows = tuple(
        SummaryRow(
            bidegree,
            (
                columns[0][bidegree],
                columns[1][bidegree],
                columns[2][bidegree],
                columns[3][bidegree],
            ),
            DEFORMATION_SUMMARY[bidegree],
        )
        for bidegree in BIDEGREES
    )
    summary = DeformationSummary(
        str(base.params.C), str(deformed.params.t), rows, base.ddbar, deformed.ddbar
    )
    if not summary.matches:
        logger.warning(f"Deformation summary for {deformed.params} differs from the reference data")
    return summary


def deformation_summary(C: ScalarInput, t: ScalarInput) -> DeformationSummary:
    """Recompute the deformation summary for C = i/(2k+1) and one t != 0."""
    deformed = NakamuraParams.of(C, t)
    if not deformed.t:
        raise ValidationError("The deformation summary needs t != 0")
    return summarize_deformation(
        params_report(NakamuraParams.of(C), verify=False), params_report(deformed, verify=False)
    )
