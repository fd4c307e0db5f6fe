"""
The J_C family on the Nakamura algebra, its moduli and its deformations.

    d w1 = -(C - i) w13 - (C + i) w1~3
    d w2 =  (C - i) w23 + (C + i) w2~3
    d w3 = 0
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any

from ..cohomology.double_complex import from_coframe
from ..cohomology.theories import cohomology
from ..domain.gaussian import I_UNIT, ONE, ZERO, GaussianRational, ScalarInput
from ..domain.matrix import ExactMatrix
from ..geometry.coframe import Coframe
from ..geometry.deformation import deform_coframe
from ..geometry.forms import Form, complex_monomial, coordinates, render_complex_form
from ..utilities.constants import COMPLEX_DIMENSION, InternalConsistencyError, Theory, ValidationError
from .characters import require_c

logger = logging.getLogger(__name__)

_N = COMPLEX_DIMENSION


class ModuliFamily(Enum):
    """The three families of splitting-type structures on the Nakamura algebra."""

    PARALLELIZABLE = "i"
    J_A = "ii"
    J_B = "iii"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, text: str) -> "ModuliFamily":
        key = text.strip().lower().strip("()")
        for family in cls:
            if family.value == key:
                return family
        raise ValidationError(f"Unknown moduli family: {text}")


def jc_coframe(C: ScalarInput) -> Coframe:
    c = require_c(C)
    minus, plus = c - I_UNIT, c + I_UNIT
    d1 = complex_monomial([1, 3], [], _N, -minus) + complex_monomial([1], [3], _N, -plus)
    d2 = complex_monomial([2, 3], [], _N, minus) + complex_monomial([2], [3], _N, plus)
    return Coframe([d1, d2, Form.zero()], name=f"J_C(C={c})")


def _family_equations(family: ModuliFamily, param: GaussianRational) -> Coframe:
    if family == ModuliFamily.PARALLELIZABLE:
        d1 = complex_monomial([1, 3], [], _N, -ONE)
        d2 = complex_monomial([2, 3], [], _N, ONE)
    elif family == ModuliFamily.J_A:
        d1 = complex_monomial([1, 3], [], _N, param) + complex_monomial([1], [3], _N, -ONE)
        d2 = complex_monomial([2, 3], [], _N, -param) + complex_monomial([2], [3], _N, ONE)
    else:
        d1 = complex_monomial([1, 3], [], _N, -ONE) + complex_monomial([1], [3], _N, param)
        d2 = complex_monomial([2, 3], [], _N, -param.conjugate()) + complex_monomial([2], [3], _N, ONE)
    return Coframe([d1, d2, Form.zero()], name=f"family ({family}) param={param}")


def moduli_family_coframe(family: ModuliFamily | str, param: ScalarInput = 0) -> Coframe:
    """
    Structure equations of family (i), (ii) J_A with |A| != 1, or (iii) J_B with |B| < 1.

    The parameter is ignored for family (i).
    """
    if isinstance(family, str):
        family = ModuliFamily.from_string(family)
    value = GaussianRational.coerce(param)
    if family == ModuliFamily.J_A and value.norm() == 1:
        raise ValidationError(f"Family (ii) needs |A| != 1, got: {value}")
    if family == ModuliFamily.J_B and value.norm() >= 1:
        raise ValidationError(f"Family (iii) needs |B| < 1, got: {value}")
    return _family_equations(family, value)


def moduli_invariant(family: ModuliFamily | str, param: ScalarInput = 0) -> int:
    """dim H^{3,0}_∂̄ of the invariant complex; separates (iii) from (i) and (ii)."""
    cf = moduli_family_coframe(family, param)
    value = cohomology(from_coframe(cf), Theory.DOLBEAULT)[(3, 0)]
    logger.info(f"h^(3,0) of {cf.name}: {value}")
    return value


@dataclass(frozen=True)
class CoframeEquivalence:
    """A constant change of coframe carrying one structure onto another."""

    source: Coframe
    target: Coframe
    p: ExactMatrix
    q: ExactMatrix
    verified: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.render(),
            "target": self.target.render(),
            "p": [[str(x) for x in row] for row in self.p.entries()],
            "q": [[str(x) for x in row] for row in self.q.entries()],
            "verified": self.verified,
        }


def equivalence_witness_JB(B: ScalarInput) -> CoframeEquivalence:
    """
    Swap w1 and w2 and multiply w3 by conj(B): J_B becomes J_{1/B}.

    Raises ValidationError for B = 0.
    """
    b = GaussianRational.coerce(B)
    if not b:
        raise ValidationError("The J_B equivalence needs B != 0")
    source = _family_equations(ModuliFamily.J_B, b)
    p = ExactMatrix([[ZERO, ONE, ZERO], [ONE, ZERO, ZERO], [ZERO, ZERO, b.conjugate()]])
    q = ExactMatrix.zeros(_N, _N, ZERO)
    image = deform_coframe(source, p, q)
    target = _family_equations(ModuliFamily.J_B, 1 / b)
    verified = image == target
    if not verified:
        raise InternalConsistencyError(f"J_B equivalence failed for B={b}: {image!r}")
    return CoframeEquivalence(source, target, p, q, verified)


@dataclass(frozen=True)
class DeformationReport:
    """The deformation w_t^3 = w3 - t conj(w1) of the abelian structure J_0."""

    t: GaussianRational
    coframe: Coframe
    equations_match: bool
    top_derivative: Form
    closed_holomorphic_forms: int

    @property
    def canonical_trivial(self) -> bool:
        return self.top_derivative.is_zero()

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": str(self.t),
            "equations": self.coframe.render(),
            "equations_match": self.equations_match,
            "d_top_form": render_complex_form(self.top_derivative, _N),
            "canonical_trivial": self.canonical_trivial,
            "closed_1_0_forms": self.closed_holomorphic_forms,
        }


def _expected_defnak(t: GaussianRational) -> Coframe:
    return Coframe(
        [
            complex_monomial([1], [3], _N, -ONE),
            complex_monomial([1, 2], [], _N, -t.conjugate()) + complex_monomial([2], [3], _N, ONE),
            complex_monomial([3], [1], _N, -t),
        ]
    )


def closed_generator_count(cf: Coframe) -> int:
    """dim of the kernel of d on span{w1, ..., wn}."""
    two_forms = list(combinations(range(2 * cf.n), 2))
    columns = [coordinates(cf.d(cf.generator(k)), two_forms) for k in range(1, cf.n + 1)]
    return len(ExactMatrix.from_columns(columns, rows=len(two_forms)).kernel_basis())


def defnak_family(t: ScalarInput) -> DeformationReport:
    """Deform J_0 by w_t^3 = w3 - t conj(w1) and check the resulting equations."""
    value = GaussianRational.coerce(t)
    if value.norm() >= 1:
        raise ValidationError(f"Deformation parameter needs |t| < 1, got: {value}")
    base = moduli_family_coframe(ModuliFamily.J_A, ZERO)
    p = ExactMatrix.identity(_N, ONE)
    q = ExactMatrix([[ZERO] * _N, [ZERO] * _N, [-value, ZERO, ZERO]])
    cf = deform_coframe(base, p, q)
    top = cf.d(cf.top_form())
    expected_top = complex_monomial([1, 2, 3], [1], _N, -value)
    if top != expected_top:
        raise InternalConsistencyError(f"d w_t^123 = {render_complex_form(top, _N)}")
    report = DeformationReport(
        value, cf, cf == _expected_defnak(value), top, closed_generator_count(cf)
    )
    logger.info(f"Deformation t={value}: canonical trivial {report.canonical_trivial}")
    return report


def jc_deformation_coefficients(
    C: ScalarInput, t: ScalarInput
) -> tuple[GaussianRational, GaussianRational]:
    """
    Coefficients of w_t^13 and w_t^1~3 in d w_t^1 for w_t^3 = w3 - t conj(w3).

        -((C - i) + (C + i) conj(t)) / (1 - |t|^2)
        -((C + i) + (C - i) t) / (1 - |t|^2)

    d w_t^2 carries the negatives.
    """
    c = require_c(C)
    value = GaussianRational.coerce(t)
    if value.norm() >= 1:
        raise ValidationError(f"Deformation parameter needs |t| < 1, got: {value}")
    scale = 1 / (1 - value.norm())
    minus, plus = c - I_UNIT, c + I_UNIT
    return (
        -(minus + plus * value.conjugate()) * scale,
        -(plus + minus * value) * scale,
    )


def deformed_jc_coframe(C: ScalarInput, t: ScalarInput) -> Coframe:
    """J_C in the coframe w1, w2, w3 + t conj(w3)."""
    value = GaussianRational.coerce(t)
    if value.norm() >= 1:
        raise ValidationError(f"Deformation parameter needs |t| < 1, got: {value}")
    p = ExactMatrix.identity(_N, ONE)
    q = ExactMatrix([[ZERO] * _N, [ZERO] * _N, [ZERO, ZERO, value]])
    return deform_coframe(jc_coframe(C), p, q)
