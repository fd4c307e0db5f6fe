"""
Special Hermitian metric conditions for a fixed integrable coframe.

The quadratic conditions are evaluated on F and F^2 directly; the two
exactness conditions are decided by solving exact linear systems built from
the monomial matrices of ∂ and ∂̄.
"""

import logging
from collections.abc import Callable

from ..domain.gaussian import ZERO
from ..geometry.coframe import Coframe
from ..geometry.forms import Form, bidegree_basis, coordinates, from_coordinates
from ..utilities.constants import DifferentialKind, IntegrabilityError, MetricKind, ValidationError
from .hermitian import HermitianMetric, fundamental_form, is_positive

logger = logging.getLogger(__name__)


def hermitian_symplectic_potential(m: HermitianMetric, cf: Coframe) -> Form | None:
    """A (0,2)-form beta with ∂̄F = ∂beta and ∂̄beta = 0, or None."""
    f = fundamental_form(m, cf.n)
    del_matrix = cf.operator_matrix(DifferentialKind.DEL, 0, 2)
    delbar_matrix = cf.operator_matrix(DifferentialKind.DELBAR, 0, 2)
    rhs = coordinates(cf.delbar(f), bidegree_basis(cf.n, 1, 2))
    rhs += [ZERO] * delbar_matrix.rows
    solution = del_matrix.vstack(delbar_matrix).solve(rhs)
    if solution is None:
        return None
    return from_coordinates(solution, bidegree_basis(cf.n, 0, 2))


def strongly_gauduchon_potential(m: HermitianMetric, cf: Coframe) -> Form | None:
    """A (n, n-2)-form gamma with ∂̄gamma = ∂F^{n-1}, or None."""
    n = cf.n
    target = cf.del_(fundamental_form(m, n).power(n - 1))
    matrix = cf.operator_matrix(DifferentialKind.DELBAR, n, n - 2)
    solution = matrix.solve(coordinates(target, bidegree_basis(n, n, n - 1)))
    if solution is None:
        return None
    return from_coordinates(solution, bidegree_basis(n, n, n - 2))


def _kahler(f: Form, cf: Coframe) -> bool:
    return cf.d(f).is_zero()


def _skt(f: Form, cf: Coframe) -> bool:
    return cf.del_(cf.delbar(f)).is_zero()


def _one_gauduchon(f: Form, cf: Coframe) -> bool:
    return cf.del_(cf.delbar(f)).wedge(f.power(cf.n - 2)).is_zero()


def _balanced(f: Form, cf: Coframe) -> bool:
    return cf.d(f.power(cf.n - 1)).is_zero()


def _gauduchon(f: Form, cf: Coframe) -> bool:
    return cf.del_(cf.delbar(f.power(cf.n - 1))).is_zero()


_FORM_PREDICATES: dict[MetricKind, Callable[[Form, Coframe], bool]] = {
    MetricKind.KAHLER: _kahler,
    MetricKind.SKT: _skt,
    MetricKind.ONE_GAUDUCHON: _one_gauduchon,
    MetricKind.BALANCED: _balanced,
    MetricKind.GAUDUCHON: _gauduchon,
}


def metric_predicate(kind: MetricKind, m: HermitianMetric, cf: Coframe) -> bool:
    """
    Decide whether the Hermitian structure (J, F) is of the given kind.

    Raises ValidationError for a metric that is not positive-definite and
    IntegrabilityError for a non-integrable coframe.
    """
    if not is_positive(m):
        raise ValidationError(f"Metric {m} is not positive-definite")
    if not cf.is_integrable():
        raise IntegrabilityError(f"Metric conditions need an integrable structure: {cf.defect()}")
    if kind == MetricKind.HERMITIAN_SYMPLECTIC:
        result = hermitian_symplectic_potential(m, cf) is not None
    elif kind == MetricKind.STRONGLY_GAUDUCHON:
        result = strongly_gauduchon_potential(m, cf) is not None
    else:
        result = _FORM_PREDICATES[kind](fundamental_form(m, cf.n), cf)
    logger.debug(f"{kind} for {m} on {cf.name or 'coframe'}: {result}")
    return result


def satisfied_kinds(m: HermitianMetric, cf: Coframe) -> list[MetricKind]:
    """Every kind the structure satisfies, in table order."""
    return [kind for kind in MetricKind if metric_predicate(kind, m, cf)]
