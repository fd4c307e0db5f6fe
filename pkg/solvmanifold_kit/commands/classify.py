"""
Classify command - catalog label of a splitting-type structure.
"""

from ..classification.classifier import classify
from ..geometry.coframe import SplittingParams, splitting_coframe
from ..utilities.constants import Family
from ..utilities.formatters import format_matrix, group, key_value_panel, text_block
from .core.command_result import CommandResult


def splitting_params(family: str, A: str, B: str, eps: int) -> SplittingParams:
    """Parameters from CLI text; A and B use the complex scalar grammar."""
    if family.upper() == Family.KT.value:
        return SplittingParams.kt(eps)
    return SplittingParams.c2(A, B, eps)


def classify_command(A: str = "0", B: str = "0", eps: int = 1, family: str = "C2") -> CommandResult:
    """Label, verified basis change and the table row that fired."""
    params = splitting_params(family, A, B, eps)
    result = classify(params)
    data = result.to_dict()
    data["equations"] = splitting_coframe(params).render()
    summary = {
        "parameters": str(params),
        "label": str(result.label),
        "raw label": str(result.raw_label),
        "normalization": [str(step) for step in result.chain.steps],
        "row": result.provenance,
    }
    if result.invariants is not None:
        summary.update(
            {f"invariant {k}": v for k, v in result.invariants.to_dict().items() if v is not None}
        )
    view = group(
        key_value_panel("classification", summary, subtitle=result.provenance),
        text_block("structure equations", "\n".join(data["equations"])),
        text_block(
            "basis change (alpha-basis to catalog basis)", format_matrix(data["basis_change"])
        ),
    )
    return CommandResult.success("classify", data, result.provenance, view)
