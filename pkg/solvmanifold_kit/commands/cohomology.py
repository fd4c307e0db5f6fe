"""
Cohomology command - Dolbeault, Bott-Chern, Aeppli and de Rham dimensions.

With ``--C`` the finite complexes of the Nakamura structure J_C are used
(Dolbeault from B, the other theories from C); otherwise the invariant
complex of a splitting-type structure.
"""

from typing import Any

from ..cohomology.ddbar import ddbar_lemma
from ..cohomology.double_complex import DoubleComplex, from_coframe
from ..cohomology.theories import cohomology
from ..geometry.coframe import splitting_coframe
from ..nakamura.characters import NakamuraParams, lattice_class
from ..nakamura.complexes import build_complexes
from ..nakamura.tables import BIDEGREES, expected_dimension
from ..utilities.constants import COMPLEX_DIMENSION, Theory
from ..utilities.formatters import data_table, format_bidegree
from .classify import splitting_params
from .core.command_result import CommandResult


def _theories(theory: str | None) -> list[Theory]:
    return [Theory.from_string(theory)] if theory else list(Theory)


def _keys(theory: Theory, dc: DoubleComplex) -> list[Any]:
    if theory == Theory.DE_RHAM:
        return list(range(2 * COMPLEX_DIMENSION + 1))
    return [bidegree for bidegree in BIDEGREES if bidegree in dc.bases]


def _render_key(key: Any) -> str:
    return format_bidegree(key) if isinstance(key, tuple) else f"k={key}"


def cohomology_command(
    C: str | None = None,
    t: str = "0",
    theory: str | None = None,
    A: str = "0",
    B: str = "0",
    eps: int = 1,
    family: str = "C2",
) -> CommandResult:
    """Dimensions per theory, with reference values where a table lists them."""
    theories = _theories(theory)
    params: NakamuraParams | None = None
    if C is not None:
        params = NakamuraParams.of(C, t)
        b, c = build_complexes(params)
        complexes = {th: b if th == Theory.DOLBEAULT else c for th in theories}
        ddbar_complex = c
        subject: dict[str, Any] = params.to_dict()
        provenance = f"Nakamura cohomology tables, class {lattice_class(params.C)}"
    else:
        splitting = splitting_params(family, A, B, eps)
        dc = from_coframe(splitting_coframe(splitting))
        complexes = dict.fromkeys(theories, dc)
        ddbar_complex = dc
        subject = splitting.to_dict()
        provenance = "invariant forms of the splitting-type structure"

    cells = []
    rows = []
    matches = True
    for th in theories:
        dc = complexes[th]
        table = cohomology(dc, th)
        for key in _keys(th, dc):
            expected = expected_dimension(params, th, key) if params is not None else None
            matches = matches and (expected is None or expected == table[key])
            cells.append(
                {
                    "theory": str(th),
                    "key": list(key) if isinstance(key, tuple) else key,
                    "dim": table[key],
                    "expected": expected,
                }
            )
            rows.append([str(th), _render_key(key), table[key], expected])

    data = {
        "subject": subject,
        "cells": cells,
        "ddbar_lemma": ddbar_lemma(ddbar_complex),
        "matches_reference": matches,
    }
    view = data_table(
        f"cohomology of {', '.join(f'{k}={v}' for k, v in subject.items())}",
        ["theory", "degree", "dim", "reference"],
        rows,
        caption=f"{provenance}; ∂∂̄-lemma: {data['ddbar_lemma']}",
    )
    return CommandResult.success("cohomology", data, provenance, view)
