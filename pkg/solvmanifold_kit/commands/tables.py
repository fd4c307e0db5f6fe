"""
Tables command - regenerate every reference table from scratch.

Sections, in output order: the classification label columns, the metric
existence table, the Dolbeault table per C-class, the deformation summary and
the harmonic representative report. ``--sweep`` adds the seeded classification
sweep with its canonical-bundle check.
"""

import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Final

from rich.console import RenderableType

from ..classification.tables import classification_sweep, classification_tables
from ..metrics.existence import corollary_checks, existence_table
from ..nakamura.characters import LatticeClass, lattice_class
from ..nakamura.tables import (
    BETTI_NUMBERS,
    BIDEGREES,
    NakamuraTables,
    ParamsReport,
    nakamura_tables,
    summarize_deformation,
)
from ..utilities.constants import (
    DEFAULT_SAMPLE_HEIGHT,
    DEFAULT_SAMPLE_SEED,
    NAKAMURA_C_SAMPLES,
    NAKAMURA_T_SAMPLES,
    Theory,
    ValidationError,
)
from ..utilities.formatters import (
    data_table,
    format_bidegree,
    format_mark,
    group,
    key_value_panel,
)
from ..utilities.serialization import write_json
from .core.command_result import CommandResult

logger = logging.getLogger(__name__)

PROVENANCE = "classification, metric existence, Nakamura cohomology and deformation tables"

Section = tuple[dict[str, Any], list[RenderableType], bool]

SECTIONS: Final[tuple[str, ...]] = (
    "classification",
    "metrics",
    "dolbeault",
    "deformation",
    "representatives",
)


def _classification_section() -> Section:
    tables = classification_tables()
    views: list[RenderableType] = [
        data_table(
            table.name,
            ["row", "parameters", "label"],
            [[row, str(result.params), str(result.label)] for row, result in table.results],
        )
        for table in tables
    ]
    return {"tables": [table.to_dict() for table in tables]}, views, True


def _metrics_section() -> Section:
    table = existence_table()
    corollary = corollary_checks(table)
    views: list[RenderableType] = [
        data_table(
            "existence of Hermitian metrics",
            table.headers,
            [[row.name, *row.marks()] for row in table.rows],
        ),
        key_value_panel(
            "SKT + balanced implies Kähler",
            {
                "structures checked": corollary.checked,
                "violations": [str(p) for p in corollary.violations],
                "s1 witness": corollary.s1_witness,
                "witness holds": corollary.s1_witness_holds,
            },
        ),
    ]
    data = {"existence": table.to_dict(), "corollary": corollary.to_dict()}
    return data, views, corollary.holds and table.matches_reference


def _dolbeault_section(reports: Sequence[ParamsReport]) -> Section:
    base = [report for report in reports if not report.params.t]
    headers = ["", *(f"C={report.params.C}" for report in base)]
    rows: list[list[Any]] = []
    for bidegree in BIDEGREES:
        row: list[Any] = [f"h^{format_bidegree(bidegree)}"]
        row += [report.column(Theory.DOLBEAULT)[bidegree] for report in base]
        rows.append(row)
    for degree, betti in enumerate(BETTI_NUMBERS):
        row = [f"b_{degree}"]
        for report in base:
            dim = report.column(Theory.DE_RHAM)[degree]
            row.append(dim if dim == betti else f"{dim} (expected {betti})")
        rows.append(row)
    classes = ", ".join(f"{report.params.C}: {lattice_class(report.params.C)}" for report in base)
    view = data_table("Dolbeault cohomology at t = 0", headers, rows, caption=classes)
    data = {
        "columns": [
            {
                **report.params.to_dict(),
                "dolbeault": report.column(Theory.DOLBEAULT),
                "de_rham": report.column(Theory.DE_RHAM),
                "ddbar_lemma": report.ddbar,
                "matches_reference": all(
                    cell.matches for cell in report.cells if cell.theory != Theory.BOTT_CHERN
                ),
            }
            for report in base
        ]
    }
    ok = all(column["matches_reference"] for column in data["columns"])
    return data, [view], ok


def _deformation_section(reports: Sequence[ParamsReport]) -> Section:
    base = {
        report.params.C: report
        for report in reports
        if not report.params.t and lattice_class(report.params.C) == LatticeClass.ODD
    }
    summaries = [
        summarize_deformation(base[report.params.C], report)
        for report in reports
        if report.params.t
    ]
    views: list[RenderableType] = [
        data_table(
            f"deformation of X at C={summary.C}, t={summary.t}",
            ["bidegree", "computed", "expected", "match"],
            [
                [format_bidegree(row.bidegree), list(row.computed), list(row.expected), row.matches]
                for row in summary.rows
            ],
            caption=(
                f"∂∂̄-lemma at t=0: {format_mark(summary.ddbar_t0)}, "
                f"at t: {format_mark(summary.ddbar_t)}"
            ),
        )
        for summary in summaries
    ]
    data = {"summaries": [summary.to_dict() for summary in summaries]}
    return data, views, all(summary.matches for summary in summaries)


def _representatives_section(tables: NakamuraTables) -> Section:
    rows = [
        [str(report.params), theory, verified]
        for report in tables.reports
        for theory, verified in sorted(report.representatives_verified.items())
    ]
    view = data_table("harmonic representatives", ["structure", "theory", "verified"], rows)
    data = {
        "checks": [
            {
                "params": report.params.to_dict(),
                "verified": dict(sorted(report.representatives_verified.items())),
            }
            for report in tables.reports
            if report.representatives_verified
        ]
    }
    return data, [view], all(row[2] for row in rows)


def _sweep_section(samples: int, seed: int, height: int) -> Section:
    sweep = classification_sweep(samples, seed, height)
    view = key_value_panel(
        "classification sweep",
        {
            "samples": sweep.samples,
            "seed": sweep.seed,
            **{label: count for label, count in sorted(sweep.counts.items())},
            "searched": sweep.searched,
            **{f"witness {name}": ok for name, ok in sweep.witnesses.items()},
            "B = -eps forces s4, s7^1, s8, s12": not sweep.canonical_violations,
        },
    )
    return sweep.to_dict(), [view], sweep.holds


def tables_command(
    sections: Sequence[str] | None = None,
    fixtures: Path | None = None,
    sweep_samples: int = 0,
    seed: int = DEFAULT_SAMPLE_SEED,
    height: int = DEFAULT_SAMPLE_HEIGHT,
) -> CommandResult:
    """Regenerate the selected tables (all by default) and compare with the reference data."""
    selected = list(sections) if sections else list(SECTIONS)
    unknown = [name for name in selected if name not in SECTIONS]
    if unknown:
        raise ValidationError(f"Unknown table section(s): {', '.join(unknown)}")

    data: dict[str, Any] = {}
    views: list[RenderableType] = []
    mismatched: list[str] = []

    tables: NakamuraTables | None = None
    if {"dolbeault", "deformation", "representatives"} & set(selected):
        tables = nakamura_tables(NAKAMURA_C_SAMPLES, NAKAMURA_T_SAMPLES, verify=True)

    for name in SECTIONS:
        if name not in selected:
            continue
        logger.info(f"Regenerating the {name} tables")
        if name == "classification":
            section = _classification_section()
        elif name == "metrics":
            section = _metrics_section()
        elif tables is None:
            continue
        elif name == "dolbeault":
            section = _dolbeault_section(tables.reports)
        elif name == "deformation":
            section = _deformation_section(tables.reports)
        else:
            section = _representatives_section(tables)
        data[name], section_views, ok = section
        views.extend(section_views)
        if not ok:
            mismatched.append(name)

    if sweep_samples:
        data["sweep"], section_views, ok = _sweep_section(sweep_samples, seed, height)
        views.extend(section_views)
        if not ok:
            mismatched.append("sweep")

    if fixtures is not None:
        written = [
            str(write_json(fixtures / f"{name}.json", section)) for name, section in data.items()
        ]
        data["fixtures"] = written
        logger.info(f"Wrote {len(written)} fixture files to {fixtures}")

    data["matches_reference"] = not mismatched
    view = group(*views)
    if mismatched:
        message = f"Regenerated tables differ from the reference data: {', '.join(mismatched)}"
        return CommandResult.infeasible("tables", data, message, PROVENANCE, view)
    return CommandResult.success("tables", data, PROVENANCE, view)
