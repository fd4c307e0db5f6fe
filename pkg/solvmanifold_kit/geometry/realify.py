"""
Passage between complex coframes and real Lie algebras.

The real coframe is alpha^1..alpha^2n with omega^k = alpha^{2k-1} + i alpha^{2k};
the associated almost-complex structure is the standard one,
J e_{2k-1} = e_{2k}, J e_{2k} = -e_{2k-1}.
"""

import logging
from fractions import Fraction
from itertools import combinations

from ..domain.gaussian import GaussianRational
from ..domain.matrix import ExactMatrix
from ..lie.algebra import RealLieAlgebra
from ..utilities.constants import ValidationError
from .coframe import Coframe
from .forms import Form

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)


def _real_images(n: int) -> list[Form]:
    """omega^k and conj(omega^k) as complex 1-forms in the real coframe."""
    i_unit = GaussianRational(0, 1)
    holo = [Form({(2 * k,): 1, (2 * k + 1,): i_unit}) for k in range(n)]
    anti = [Form({(2 * k,): 1, (2 * k + 1,): -i_unit}) for k in range(n)]
    return holo + anti


def _complex_images(n: int) -> list[Form]:
    """alpha^j as complex 1-forms in omega, conj(omega)."""
    images: list[Form] = []
    for k in range(n):
        images.append(Form({(k,): _HALF, (k + n,): _HALF}))
        images.append(Form({(k,): GaussianRational(0, -_HALF), (k + n,): GaussianRational(0, _HALF)}))
    return images


def realify(cf: Coframe) -> RealLieAlgebra:
    """Real structure equations d alpha^j of the coframe."""
    images = _real_images(cf.n)
    forms: list[Form] = []
    for eq in cf.equations:
        real_form = eq.substitute(images)
        for part in ("re", "im"):
            component = real_form.map_coefficients(
                lambda c, part=part: getattr(GaussianRational.coerce(c), part)
            )
            forms.append(component)
    g = RealLieAlgebra(forms, name=cf.name)
    logger.debug(f"Realified {cf.name or 'coframe'} to {g.to_salamon()}")
    return g


def complexify(g: RealLieAlgebra) -> Coframe:
    """Coframe omega^k = alpha^{2k-1} + i alpha^{2k} of an even-dimensional algebra."""
    if g.dim % 2:
        raise ValidationError(f"Odd-dimensional algebra cannot carry J: dim={g.dim}")
    n = g.dim // 2
    images = _complex_images(n)
    i_unit = GaussianRational(0, 1)
    equations = []
    for k in range(n):
        real_part = g.diff[2 * k].substitute(images)
        imag_part = g.diff[2 * k + 1].substitute(images)
        equations.append(real_part + imag_part.scale(i_unit))
    return Coframe(equations, name=g.name)


def standard_j(dim: int) -> ExactMatrix:
    """Matrix of J e_{2k-1} = e_{2k}, J e_{2k} = -e_{2k-1} acting on column vectors."""
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        rows[k + 1][k] = Fraction(1)
        rows[k][k + 1] = Fraction(-1)
    return ExactMatrix(rows)


def nijenhuis(j: ExactMatrix, g: RealLieAlgebra) -> dict[tuple[int, int], tuple[Fraction, ...]]:
    """
    Nijenhuis tensor N(e_a, e_b) for a < b.

    N(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y].
    """
    if j.shape != (g.dim, g.dim):
        raise ValidationError(f"J of shape {j.shape} for dimension {g.dim}")
    basis = [tuple(Fraction(int(i == k)) for i in range(g.dim)) for k in range(g.dim)]
    tensor: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for a, b in combinations(range(g.dim), 2):
        x, y = basis[a], basis[b]
        jx, jy = j.apply(x), j.apply(y)
        terms = [
            g.bracket(jx, jy),
            tuple(-v for v in j.apply(g.bracket(jx, y))),
            tuple(-v for v in j.apply(g.bracket(x, jy))),
            tuple(-v for v in g.bracket(x, y)),
        ]
        tensor[(a, b)] = tuple(sum((t[i] for t in terms), Fraction(0)) for i in range(g.dim))
    return tensor


def is_complex_structure(j: ExactMatrix, g: RealLieAlgebra) -> bool:
    """J^2 = -1 and vanishing Nijenhuis tensor."""
    if j @ j != -ExactMatrix.identity(g.dim):
        return False
    return all(not any(v) for v in nijenhuis(j, g).values())
