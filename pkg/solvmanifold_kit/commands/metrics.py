"""
Metrics command - special Hermitian metrics on a splitting-type structure.

Without ``--exists`` the predicates are evaluated on one metric given by its
coefficients; with ``--exists`` every requested kind gets a certificate.
"""

from ..geometry.coframe import splitting_coframe
from ..metrics.existence import TABLE_HEADERS, exists_metric
from ..metrics.hermitian import HermitianMetric, is_positive
from ..metrics.predicates import metric_predicate
from ..utilities.constants import MetricKind, ValidationError
from ..utilities.formatters import data_table, format_mark, key_value_panel
from .classify import splitting_params
from .core.command_result import CommandResult

PROVENANCE = "existence of Hermitian metrics for splitting-type structures"


def _kinds(kind: str | None) -> list[MetricKind]:
    return [MetricKind.from_string(kind)] if kind else list(MetricKind)


def metrics_command(
    A: str = "0",
    B: str = "0",
    eps: int = 1,
    family: str = "C2",
    kind: str | None = None,
    exists: bool = False,
    t2: str = "1",
    u: str = "0",
    v: str = "0",
    z: str = "0",
) -> CommandResult:
    """Predicate values for one metric, or existence certificates."""
    params = splitting_params(family, A, B, eps)
    kinds = _kinds(kind)

    if exists:
        certificates = [exists_metric(k, params) for k in kinds]
        data = {
            "params": params.to_dict(),
            "certificates": [c.to_dict() for c in certificates],
        }
        view = data_table(
            f"metrics on {params}",
            ["kind", "exists", "witness / obstruction"],
            [
                [
                    TABLE_HEADERS.get(c.kind, str(c.kind)),
                    format_mark(c.feasible),
                    str(c.witness) if c.witness else c.obstruction,
                ]
                for c in certificates
            ],
            caption=PROVENANCE,
        )
        if kind and not certificates[0].feasible:
            message = f"No invariant {kinds[0]} metric: {certificates[0].obstruction}"
            return CommandResult.infeasible("metrics", data, message, PROVENANCE, view)
        return CommandResult.success("metrics", data, PROVENANCE, view)

    metric = HermitianMetric.normalized(t2, u, v, z)
    if not is_positive(metric):
        raise ValidationError(f"Metric {metric} is not positive definite")
    cf = splitting_coframe(params)
    values = {str(k): metric_predicate(k, metric, cf) for k in kinds}
    data = {"params": params.to_dict(), "metric": metric.to_dict(), "predicates": values}
    view = key_value_panel(f"{metric} on {params}", values, subtitle="metric predicates")
    return CommandResult.success("metrics", data, "metric predicates", view)
