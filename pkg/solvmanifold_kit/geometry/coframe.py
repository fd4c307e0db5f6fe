"""
Complex (1,0)-coframes with constant structure equations.

Generators 0..n-1 are omega^1..omega^n, generators n..2n-1 their conjugates.
The structure equations d omega^k are kept as complex 2-forms, including any
(0,2) part; integrability is the vanishing of those parts.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from ..domain.gaussian import ONE, ZERO, GaussianRational, ScalarInput
from ..domain.matrix import ExactMatrix
from ..utilities.constants import (
    COMPLEX_DIMENSION,
    DifferentialKind,
    Family,
    IntegrabilityError,
    ValidationError,
)
from .forms import (
    Form,
    bidegree_basis,
    bidegree_of,
    bidegree_part,
    complex_monomial,
    conjugate_form,
    coordinates,
    render_complex_form,
    to_gaussian,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplittingParams:
    """Parameters (family, A, B, eps) of the reduced splitting-type equations."""

    family: Family
    A: GaussianRational = ZERO
    B: GaussianRational = ZERO
    eps: int = 1

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValidationError(f"eps must be 0 or 1, got: {self.eps}")
        object.__setattr__(self, "A", GaussianRational.coerce(self.A))
        object.__setattr__(self, "B", GaussianRational.coerce(self.B))
        if self.family == Family.KT and (self.A or self.B):
            logger.debug("A and B are ignored for the KT family")

    @classmethod
    def c2(cls, A: ScalarInput, B: ScalarInput, eps: int) -> "SplittingParams":
        return cls(Family.C2, GaussianRational.coerce(A), GaussianRational.coerce(B), eps)

    @classmethod
    def kt(cls, eps: int = 1) -> "SplittingParams":
        return cls(Family.KT, ZERO, ZERO, eps)

    def __str__(self) -> str:
        if self.family == Family.KT:
            return f"KT(eps={self.eps})"
        return f"C2(A={self.A}, B={self.B}, eps={self.eps})"

    def to_dict(self) -> dict[str, Any]:
        return {"family": str(self.family), "A": str(self.A), "B": str(self.B), "eps": self.eps}


class Coframe:
    """Structure equations d omega^1..d omega^n of an invariant almost-complex structure."""

    __slots__ = ("_images", "equations", "n", "name")

    def __init__(self, equations: Sequence[Form], name: str | None = None) -> None:
        """Create from the 2-forms d omega^k over the 2n complex generators."""
        n = len(equations)
        forms = [to_gaussian(eq) for eq in equations]
        for form in forms:
            if form.degrees() - {2}:
                raise ValueError("Structure equations must be 2-forms")
            for key, _ in form.items():
                if max(key) >= 2 * n:
                    raise ValueError(f"Generator index {max(key)} out of range for n={n}")
        self.n = n
        self.equations: tuple[Form, ...] = tuple(forms)
        self.name = name
        self._images: tuple[Form, ...] = self.equations + tuple(
            conjugate_form(eq, n) for eq in self.equations
        )

    @classmethod
    def abelian(cls, n: int = COMPLEX_DIMENSION) -> "Coframe":
        return cls([Form.zero()] * n, name="abelian")

    def images(self) -> tuple[Form, ...]:
        """d of every generator, holomorphic ones first."""
        return self._images

    def generator(self, k: int, conjugate: bool = False) -> Form:
        """omega^k (1-based), or its conjugate."""
        return Form.generator(k - 1 + (self.n if conjugate else 0), GaussianRational(1))

    def monomial(self, holo: Sequence[int], anti: Sequence[int] = (), coeff: Any = 1) -> Form:
        return complex_monomial(holo, anti, self.n, GaussianRational.coerce(coeff))

    def part(self, k: int, p: int, q: int) -> Form:
        """Type (p, q) component of d omega^k (1-based)."""
        return bidegree_part(self.equations[k - 1], self.n, p, q)

    def is_integrable(self) -> bool:
        """True iff no structure equation has a (0,2) part."""
        return all(self.part(k, 0, 2).is_zero() for k in range(1, self.n + 1))

    def defect(self) -> dict[int, str]:
        """Nonzero (0,2) parts, keyed by the 1-based equation index."""
        return {
            k: render_complex_form(self.part(k, 0, 2), self.n)
            for k in range(1, self.n + 1)
            if not self.part(k, 0, 2).is_zero()
        }

    def d(self, form: Form) -> Form:
        """Exterior differential of a constant-coefficient form."""
        return form.derivation(self._images)

    def delta(self, form: Form, kind: DifferentialKind) -> Form:
        """Apply d, ∂ or ∂̄; ∂ and ∂̄ need an integrable structure."""
        if kind == DifferentialKind.D:
            return self.d(form)
        if not self.is_integrable():
            raise IntegrabilityError("∂ and ∂̄ are undefined for a non-integrable structure")
        shift = (1, 0) if kind == DifferentialKind.DEL else (0, 1)
        result = Form.zero()
        for key, coeff in form.items():
            p, q = bidegree_of(key, self.n)
            image = self.d(Form({key: coeff}))
            result = result + bidegree_part(image, self.n, p + shift[0], q + shift[1])
        return result

    def operator_matrix(self, kind: DifferentialKind, p: int, q: int) -> ExactMatrix:
        """Matrix of ∂ or ∂̄ from type (p, q) to (p+1, q) or (p, q+1), on monomial bases."""
        if kind == DifferentialKind.D:
            raise ValueError("operator_matrix is defined for ∂ and ∂̄ only")
        source = bidegree_basis(self.n, p, q)
        target = (
            bidegree_basis(self.n, p + 1, q)
            if kind == DifferentialKind.DEL
            else bidegree_basis(self.n, p, q + 1)
        )
        columns = [coordinates(self.delta(Form({key: ONE}), kind), target) for key in source]
        return ExactMatrix.from_columns(columns, rows=len(target))

    def del_(self, form: Form) -> Form:
        return self.delta(form, DifferentialKind.DEL)

    def delbar(self, form: Form) -> Form:
        return self.delta(form, DifferentialKind.DELBAR)

    def conjugate(self, form: Form) -> Form:
        return conjugate_form(form, self.n)

    def top_form(self) -> Form:
        """omega^{1...n}."""
        return self.monomial(range(1, self.n + 1))

    def canonical_trivial(self) -> bool:
        """True iff d omega^{1...n} = 0."""
        return self.d(self.top_form()).is_zero()

    def render(self) -> list[str]:
        """One line per equation, e.g. ``d w1 = A*w13 + B*w1~3``."""
        return [
            f"d w{k + 1} = {render_complex_form(eq, self.n)}" for k, eq in enumerate(self.equations)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coframe):
            return False
        return self.n == other.n and self.equations == other.equations

    def __hash__(self) -> int:
        return hash(self.equations)

    def __repr__(self) -> str:
        return f"Coframe({'; '.join(self.render())})"


def splitting_coframe(params: SplittingParams) -> Coframe:
    """Reduced structure equations of the C2 or KT splitting family."""
    n = COMPLEX_DIMENSION
    eps = GaussianRational(params.eps)
    if params.family == Family.C2:
        A, B = params.A, params.B
        d1 = complex_monomial([1, 3], [], n, A) + complex_monomial([1], [3], n, B)
        d2 = complex_monomial([2, 3], [], n, -(A + B.conjugate() + eps)) + complex_monomial(
            [2], [3], n, eps
        )
    else:
        d1 = complex_monomial([1, 3], [], n, eps) + complex_monomial([1], [3], n, -eps)
        d2 = complex_monomial([1], [1], n, GaussianRational(1))
    return Coframe([d1, d2, Form.zero()], name=str(params))


def differential(form: Form, kind: DifferentialKind, cf: Coframe) -> Form:
    """d, ∂ or ∂̄ of a form in the coframe's basis."""
    return cf.delta(form, kind)


def integrability_check(cf: Coframe) -> bool:
    return cf.is_integrable()


def canonical_trivial(cf: Coframe) -> bool:
    """Holomorphically trivial invariant canonical bundle."""
    if not cf.is_integrable():
        raise IntegrabilityError("Canonical bundle check needs an integrable structure")
    return cf.canonical_trivial()


def render_coframe(cf: Coframe) -> str:
    """Structure equations as text, one ``d wk = ...`` line per generator."""
    return "\n".join(cf.render())
