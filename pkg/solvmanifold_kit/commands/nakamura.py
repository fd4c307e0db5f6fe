"""
Nakamura command - the J_C structures, their lattices and deformations.

Exactly one mode flag selects what is computed: ``--ddbar``, ``--deform``,
``--characters``, ``--moduli``, ``--unstable`` or ``--jb-witness``.
"""

from typing import Any

from ..cohomology.ddbar import ddbar_lemma, lemma_b_sufficient
from ..nakamura.characters import (
    LOG_DEFINITION,
    LatticeClass,
    NakamuraParams,
    char_restriction_trivial,
    characters,
    lattice_class,
    lattice_exponents,
    odd_class_c,
    require_c,
)
from ..nakamura.complexes import build_complexes
from ..nakamura.family import (
    defnak_family,
    deformed_jc_coframe,
    equivalence_witness_JB,
    jc_deformation_coefficients,
    moduli_family_coframe,
    moduli_invariant,
)
from ..nakamura.tables import deformation_summary
from ..utilities.constants import ValidationError
from ..utilities.formatters import data_table, format_bidegree, group, key_value_panel, text_block
from .core.command_result import CommandResult

DDBAR_PROVENANCE = "∂∂̄-lemma on the C-complex: holds iff C != i/k, and for every t != 0"


def _ddbar(C: str, t: str) -> CommandResult:
    params = NakamuraParams.of(C, t)
    b, c = build_complexes(params)
    holds = ddbar_lemma(c)
    expected = bool(params.t) or lattice_class(params.C) == LatticeClass.GENERIC
    data = {
        **params.to_dict(),
        "ddbar_lemma": holds,
        "expected": expected,
        "b_complex_sufficient": lemma_b_sufficient(b),
    }
    view = key_value_panel(f"∂∂̄-lemma for {params}", data, subtitle=DDBAR_PROVENANCE)
    return CommandResult.success("nakamura", data, DDBAR_PROVENANCE, view)


def _deform(k: int, t: str) -> CommandResult:
    C = odd_class_c(k)
    first, second = jc_deformation_coefficients(C, t)
    cf = deformed_jc_coframe(C, t)
    summary = deformation_summary(C, t)
    provenance = f"deformation X_(k,t) of J_C at C = i/(2k+1) = {C}"
    data: dict[str, Any] = {
        "k": k,
        "C": str(C),
        "t": summary.t,
        "coefficients": {"w13": str(first), "w1~3": str(second)},
        "equations": cf.render(),
        "summary": summary.to_dict(),
    }
    view = group(
        key_value_panel(
            f"X_({k},{summary.t})",
            {
                "C": C,
                "d w1 coefficient of w13": first,
                "d w1 coefficient of w1~3": second,
                "∂∂̄-lemma at t=0": summary.ddbar_t0,
                "∂∂̄-lemma at t": summary.ddbar_t,
                "matches reference": summary.matches,
            },
            subtitle=provenance,
        ),
        text_block("structure equations (coframe w3 + t conj(w3))", "\n".join(cf.render())),
        data_table(
            "h_∂̄ and h_BC, t = 0 against t",
            ["bidegree", "∂̄ t=0", "BC t=0", "∂̄ t", "BC t", "reference"],
            [
                [format_bidegree(r.bidegree), *r.computed, "/".join(map(str, r.expected))]
                for r in summary.rows
            ],
        ),
    )
    return CommandResult.success("nakamura", data, provenance, view)


def _characters(C: str) -> CommandResult:
    chars = characters(C)
    products = {
        **chars,
        "beta1*gamma1": chars["beta1"] * chars["gamma1"],
        "beta1/gamma1": chars["beta1"] * chars["gamma1"].inverse(),
    }
    rows = []
    entries = {}
    for name, ch in products.items():
        at_w1, at_w2 = lattice_exponents(ch, C)
        trivial = char_restriction_trivial(ch, C)
        entries[name] = {**ch.to_dict(), "trivial_on_lattice": trivial}
        rows.append([name, str(ch), str(at_w1), str(at_w2), trivial])
    klass = lattice_class(C)
    data = {"C": str(require_c(C)), "class": str(klass), "characters": entries}
    view = data_table(
        f"characters of J_C, C = {data['C']}",
        ["character", "value", "exponent at w1", "exponent at w2", "trivial"],
        rows,
        caption=LOG_DEFINITION,
    )
    return CommandResult.success("nakamura", data, f"lattice class {klass}", view)


def _moduli(family: str, param: str) -> CommandResult:
    cf = moduli_family_coframe(family, param)
    h30 = moduli_invariant(family, param)
    provenance = "moduli of splitting-type structures on the Nakamura algebra"
    data = {"family": family, "param": param, "equations": cf.render(), "h30_dolbeault": h30}
    rows = {**data, "equations": "; ".join(cf.render())}
    view = key_value_panel(cf.name or family, rows, provenance)
    return CommandResult.success("nakamura", data, provenance, view)


def _unstable(t: str) -> CommandResult:
    report = defnak_family(t)
    provenance = "deformation w3 - t conj(w1) of the abelian structure"
    data = report.to_dict()
    view = key_value_panel(f"J_0 deformed at t={report.t}", data, provenance)
    return CommandResult.success("nakamura", data, provenance, view)


def _jb_witness(B: str) -> CommandResult:
    witness = equivalence_witness_JB(B)
    provenance = "J_B and J_(1/B) are equivalent"
    data = witness.to_dict()
    view = key_value_panel("J_B equivalence", data, provenance)
    return CommandResult.success("nakamura", data, provenance, view)


def nakamura_command(
    mode: str,
    C: str | None = None,
    t: str = "0",
    k: int | None = None,
    family: str | None = None,
    param: str = "0",
    B: str | None = None,
) -> CommandResult:
    """Dispatch one Nakamura computation."""
    if mode in ("ddbar", "characters"):
        if C is None:
            raise ValidationError(f"--{mode} needs --C")
        return _ddbar(C, t) if mode == "ddbar" else _characters(C)
    if mode == "deform":
        if k is None:
            raise ValidationError("--deform needs --k")
        return _deform(k, t)
    if mode == "moduli":
        if family is None:
            raise ValidationError("--moduli needs a family (i, ii or iii)")
        return _moduli(family, param)
    if mode == "unstable":
        return _unstable(t)
    if mode == "jb-witness":
        if B is None:
            raise ValidationError("--jb-witness needs --B")
        return _jb_witness(B)
    raise ValidationError(f"Unknown nakamura mode: {mode}")
