"""
Algebra command - parse or load structure equations and check them.
"""

from ..domain.gaussian import parse_rational
from ..lie.algebra import RealLieAlgebra
from ..lie.catalog import catalog, label
from ..lie.cohomology import ce_cohomology
from ..lie.salamon import parse_salamon
from ..utilities.constants import ValidationError
from ..utilities.formatters import key_value_panel
from .core.command_result import CommandResult


def _load(
    text: str | None, index: int | None, alpha: str | None, beta: str | None
) -> RealLieAlgebra:
    if text is not None:
        return parse_salamon(text)
    if index is None:
        raise ValidationError("algebra needs --parse TEXT or --label INDEX")
    lab = label(
        index,
        None if alpha is None else parse_rational(alpha),
        None if beta is None else parse_rational(beta),
    )
    return catalog(lab)


def algebra_command(
    text: str | None = None,
    index: int | None = None,
    alpha: str | None = None,
    beta: str | None = None,
    check: bool = False,
) -> CommandResult:
    """Jacobi identity, unimodularity and Chevalley-Eilenberg Betti numbers."""
    g = _load(text, index, alpha, beta)
    jacobi = g.jacobi_check()
    unimodular = g.unimodular_check()
    data = {
        "algebra": g.to_salamon(),
        "name": g.name,
        "dimension": g.dim,
        "jacobi": jacobi,
        "unimodular": unimodular,
        "betti": list(ce_cohomology(g)) if jacobi else None,
    }
    provenance = "catalog of unimodular splitting-type algebras" if text is None else "parsed input"
    view = key_value_panel(g.name or "algebra", data, subtitle=provenance)
    if check and not (jacobi and unimodular):
        failed = "Jacobi identity" if not jacobi else "unimodularity"
        return CommandResult.infeasible("algebra", data, f"{failed} fails", provenance, view)
    return CommandResult.success("algebra", data, provenance, view)
