"""
Dolbeault, Bott-Chern, Aeppli and de Rham dimensions of a double complex.

Every number is a difference of exact ranks:

    h_∂̄^{p,q} = dim ker ∂̄ - dim im ∂̄
    h_BC^{p,q} = dim (ker ∂ ∩ ker ∂̄) - dim im ∂∂̄
    h_A^{p,q}  = dim ker ∂∂̄ - dim (im ∂ + im ∂̄)
    b_k        = dim ker d_k - dim im d_{k-1}   (total complex)
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from ..utilities.constants import Theory
from .double_complex import Bidegree, DoubleComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions of one theory, keyed by bidegree (or total degree for de Rham)."""

    theory: Theory
    dims: dict[Any, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        negative = {key: value for key, value in self.dims.items() if value < 0}
        if negative:
            raise ValueError(f"Negative cohomology dimensions: {negative}")

    def __getitem__(self, key: Any) -> int:
        return self.dims[key]

    def total(self, k: int) -> int:
        """Sum over p + q = k; for de Rham this is b_k itself."""
        if self.theory == Theory.DE_RHAM:
            return self.dims.get(k, 0)
        return sum(value for (p, q), value in self.dims.items() if p + q == k)

    def to_dict(self) -> dict[str, Any]:
        if self.theory == Theory.DE_RHAM:
            dims = [{"k": k, "dim": self.dims[k]} for k in sorted(self.dims)]
        else:
            dims = [{"p": p, "q": q, "dim": self.dims[(p, q)]} for p, q in sorted(self.dims)]
        return {"theory": str(self.theory), "dims": dims}


def _kernel_dim(dc: DoubleComplex, p: int, q: int, rank: int) -> int:
    return dc.dim(p, q) - rank


def dolbeault_dimension(dc: DoubleComplex, p: int, q: int) -> int:
    return _kernel_dim(dc, p, q, dc.delbar_at(p, q).rank()) - dc.delbar_at(p, q - 1).rank()


def bott_chern_dimension(dc: DoubleComplex, p: int, q: int) -> int:
    closed = dc.del_at(p, q).vstack(dc.delbar_at(p, q))
    return _kernel_dim(dc, p, q, closed.rank()) - dc.ddbar_at(p - 1, q - 1).rank()


def aeppli_dimension(dc: DoubleComplex, p: int, q: int) -> int:
    exact = dc.del_at(p - 1, q).hstack(dc.delbar_at(p, q - 1))
    return _kernel_dim(dc, p, q, dc.ddbar_at(p, q).rank()) - exact.rank()


def betti_number(dc: DoubleComplex, k: int) -> int:
    return dc.total_dim(k) - dc.total_differential(k).rank() - dc.total_differential(k - 1).rank()


_BIGRADED = {
    Theory.DOLBEAULT: dolbeault_dimension,
    Theory.BOTT_CHERN: bott_chern_dimension,
    Theory.AEPPLI: aeppli_dimension,
}


def cohomology(dc: DoubleComplex, theory: Theory | str) -> CohomologyTable:
    """Exact cohomology dimensions of ``dc`` for one theory."""
    if isinstance(theory, str):
        theory = Theory.from_string(theory)
    if theory == Theory.DE_RHAM:
        dims: dict[Any, int] = {k: betti_number(dc, k) for k in range(2 * dc.n + 1)}
    else:
        compute = _BIGRADED[theory]
        dims = {(p, q): compute(dc, p, q) for p, q in sorted(dc.bases)}
    logger.debug(f"{theory} cohomology of {dc!r}: {dims}")
    return CohomologyTable(theory, dims)


def frolicher_consistent(dc: DoubleComplex) -> bool:
    """Σ_{p+q=k} h_∂̄^{p,q} = b_k in every total degree."""
    dolbeault = cohomology(dc, Theory.DOLBEAULT)
    de_rham = cohomology(dc, Theory.DE_RHAM)
    return all(dolbeault.total(k) == de_rham[k] for k in range(2 * dc.n + 1))


def frolicher_defects(dc: DoubleComplex) -> dict[int, tuple[int, int]]:
    """Total degrees where the Dolbeault sum and b_k differ, as (sum, b_k)."""
    dolbeault = cohomology(dc, Theory.DOLBEAULT)
    de_rham = cohomology(dc, Theory.DE_RHAM)
    return {
        k: (dolbeault.total(k), de_rham[k])
        for k in range(2 * dc.n + 1)
        if dolbeault.total(k) != de_rham[k]
    }


def bc_aeppli_duality(dc: DoubleComplex) -> bool:
    """h_BC^{p,q} = h_A^{n-p,n-q} for every bidegree."""
    bc = cohomology(dc, Theory.BOTT_CHERN)
    aeppli = cohomology(dc, Theory.AEPPLI)
    n = dc.n
    mismatches: list[Bidegree] = [
        (p, q) for p, q in bc.dims if bc[(p, q)] != aeppli[(n - p, n - q)]
    ]
    if mismatches:
        logger.info(f"Bott-Chern/Aeppli duality fails at {mismatches}")
    return not mismatches


def conjugation_symmetric(dc: DoubleComplex, theory: Theory = Theory.BOTT_CHERN) -> bool:
    """h^{p,q} = h^{q,p} for the given bigraded theory."""
    table = cohomology(dc, theory)
    return all(table[(p, q)] == table[(q, p)] for p, q in table.dims)
