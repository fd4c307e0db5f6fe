"""
Constant-coefficient deformations of a (1,0)-coframe.

The new coframe is omega'^a = sum_b p[a][b] omega^b + q[a][b] conj(omega^b); the
structure equations are recomputed by an exact change of basis on the
complexified dual. Non-integrable results keep their (0,2) parts.
"""

import logging
from collections.abc import Sequence

from ..domain.gaussian import GaussianRational
from ..domain.matrix import ExactMatrix, conj
from ..utilities.constants import ValidationError
from .coframe import Coframe
from .forms import Form

logger = logging.getLogger(__name__)


def _gaussian_matrix(m: ExactMatrix | Sequence[Sequence[object]]) -> ExactMatrix:
    rows = m.entries() if isinstance(m, ExactMatrix) else m
    return ExactMatrix([[GaussianRational.coerce(x) for x in row] for row in rows])  # type: ignore[arg-type]


def block_matrix(p: ExactMatrix, q: ExactMatrix) -> ExactMatrix:
    """The 2n x 2n matrix (p q; conj(q) conj(p)) acting on (omega, conj(omega))."""
    top = p.hstack(q)
    bottom = q.conjugate().hstack(p.conjugate())
    return top.vstack(bottom)


def _split_blocks(t: ExactMatrix, n: int) -> tuple[ExactMatrix, ExactMatrix]:
    entries = t.entries()
    p = ExactMatrix([list(entries[a][:n]) for a in range(n)])
    q = ExactMatrix([list(entries[a][n:]) for a in range(n)])
    return p, q


def deform_coframe(
    cf: Coframe,
    p: ExactMatrix | Sequence[Sequence[object]],
    q: ExactMatrix | Sequence[Sequence[object]],
) -> Coframe:
    """Structure equations of the coframe omega' = p omega + q conj(omega)."""
    pm, qm = _gaussian_matrix(p), _gaussian_matrix(q)
    n = cf.n
    if pm.shape != (n, n) or qm.shape != (n, n):
        raise ValidationError(f"p and q must be {n}x{n}, got {pm.shape} and {qm.shape}")
    t = block_matrix(pm, qm)
    if not t.is_invertible():
        raise ValidationError("Deformation block matrix is singular")
    t_inv = t.inverse()
    # old generators in terms of the new ones
    old_in_new = [Form({(c,): t_inv[b, c] for c in range(2 * n)}) for b in range(2 * n)]
    images = cf.images()
    equations = []
    for a in range(n):
        d_new = Form.zero()
        for b in range(2 * n):
            if t[a, b]:
                d_new = d_new + images[b].scale(t[a, b])
        equations.append(d_new.substitute(old_in_new))
    result = Coframe(equations, name=f"deformation of {cf.name}" if cf.name else None)
    if not result.is_integrable():
        logger.info(f"Deformed coframe is not integrable: {result.defect()}")
    return result


def inverse_deformation(
    p: ExactMatrix | Sequence[Sequence[object]],
    q: ExactMatrix | Sequence[Sequence[object]],
) -> tuple[ExactMatrix, ExactMatrix]:
    """(p', q') undoing the deformation (p, q)."""
    pm, qm = _gaussian_matrix(p), _gaussian_matrix(q)
    t = block_matrix(pm, qm)
    if not t.is_invertible():
        raise ValidationError("Deformation block matrix is singular")
    t_inv = t.inverse()
    n = pm.rows
    inverse_p, inverse_q = _split_blocks(t_inv, n)
    lower = t_inv.entries()
    for a in range(n):
        for b in range(n):
            if lower[a + n][b + n] != conj(inverse_p[a, b]):
                raise ValidationError("Inverse block matrix lost its real structure")
    return inverse_p, inverse_q
