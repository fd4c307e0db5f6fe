"""
Classification of splitting-type complex structures.

The decision tree in ``rows`` proposes a raw catalog label together with the
real-basis dictionary of its table row. The omega^3 part of the basis change
is solved exactly; if the dictionary does not fit, signed permutations are
searched. The reductions of ``normalize`` then bring the parameters into the
canonical range and the composite change is verified before returning.
"""

import logging
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Any

from ..domain.gaussian import GaussianRational, ScalarInput
from ..domain.matrix import ExactMatrix
from ..geometry.coframe import SplittingParams, splitting_coframe
from ..geometry.forms import Form
from ..geometry.realify import realify
from ..lie.algebra import RealLieAlgebra
from ..lie.basis_change import BasisChange, verify_isomorphism
from ..lie.catalog import CatalogLabel, raw_algebra
from ..utilities.constants import (
    REAL_DIMENSION,
    DegenerateStructureError,
    Family,
    InternalConsistencyError,
    ValidationError,
)
from .invariants import CaseInvariants, case_invariants
from .normalize import NormalizationChain, normalize_label
from .rows import RowMatch, match_row

logger = logging.getLogger(__name__)

_PAIRS = list(combinations(range(REAL_DIMENSION), 2))
_UNKNOWNS = 2 * REAL_DIMENSION


@dataclass(frozen=True)
class ClassificationResult:
    """Catalog label plus a verified change from the alpha-basis to the catalog basis."""

    params: SplittingParams
    label: CatalogLabel
    basis_change: BasisChange
    row: RowMatch
    chain: NormalizationChain
    invariants: CaseInvariants | None = None
    searched: bool = False

    @property
    def provenance(self) -> str:
        return self.row.provenance

    @property
    def raw_label(self) -> CatalogLabel:
        return self.row.raw_label

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "label": self.label.to_dict(),
            "raw_label": str(self.raw_label),
            "provenance": self.provenance,
            "normalization": [str(step) for step in self.chain.steps],
            "basis_change": self.basis_change.to_rows(),
            "invariants": self.invariants.to_dict() if self.invariants else None,
            "searched": self.searched,
        }


def _dictionary_rows(dictionary: Sequence[int], scales: Sequence[int]) -> list[list[Fraction]]:
    """Rows alpha^j = scale * sign * e^|index| for j = 1..4."""
    rows = []
    for entry, scale in zip(dictionary, scales, strict=True):
        row = [Fraction(0)] * REAL_DIMENSION
        row[abs(entry) - 1] = Fraction(scale if entry > 0 else -scale)
        rows.append(row)
    return rows


def _residual(src: RealLieAlgebra, tgt: RealLieAlgebra, q_rows: list[list[Fraction]]) -> list[Fraction]:
    """Coefficients of d_src(alpha^j) - sum_m Q[j][m] d_tgt(e^m), alpha = Q e."""
    images = [Form({(m,): c for m, c in enumerate(row)}) for row in q_rows]
    out: list[Fraction] = []
    for j in range(REAL_DIMENSION):
        lhs = src.diff[j].substitute(images)
        rhs = Form.zero()
        for m, c in enumerate(q_rows[j]):
            if c:
                rhs = rhs + tgt.diff[m].scale(c)
        diff = lhs - rhs
        out.extend(Fraction(diff.coefficient(pair)) for pair in _PAIRS)
    return out


def _unit(i: int) -> list[Fraction]:
    return [Fraction(int(i == k)) for k in range(_UNKNOWNS)]


def _candidate_rows(fixed: list[list[Fraction]], u: Sequence[Fraction]) -> list[list[Fraction]]:
    return fixed + [list(u[:REAL_DIMENSION]), list(u[REAL_DIMENSION:])]


def solve_remaining_rows(
    src: RealLieAlgebra, tgt: RealLieAlgebra, fixed: list[list[Fraction]]
) -> ExactMatrix | None:
    """
    Complete alpha = Q e given its first four rows.

    The conditions are affine in the twelve entries of rows 5 and 6, so the
    system is assembled by evaluating the residual at zero and at unit vectors.
    Returns an invertible Q or None.
    """
    zero = [Fraction(0)] * _UNKNOWNS
    base = _residual(src, tgt, _candidate_rows(fixed, zero))
    columns = []
    for i in range(_UNKNOWNS):
        shifted = _residual(src, tgt, _candidate_rows(fixed, _unit(i)))
        columns.append([s - b for s, b in zip(shifted, base, strict=True)])
    system = ExactMatrix.from_columns(columns, rows=len(base))
    particular = system.solve([-b for b in base])
    if particular is None:
        return None
    kernel = system.kernel_basis()
    for shift in _kernel_shifts(kernel):
        u = [Fraction(p) + Fraction(s) for p, s in zip(particular, shift, strict=True)]
        rows = _candidate_rows(fixed, u)
        q = ExactMatrix(rows)
        # the residual is re-evaluated in case src had terms quadratic in rows 5, 6
        if q.is_invertible() and not any(_residual(src, tgt, rows)):
            return q
    return None


def _kernel_shifts(kernel: list[Any]) -> Iterator[list[Fraction]]:
    """Zero, then single kernel vectors, then pairwise sums."""
    yield [Fraction(0)] * _UNKNOWNS
    for vec in kernel:
        yield [Fraction(x) for x in vec]
    for v, w in combinations(kernel, 2):
        yield [Fraction(a) + Fraction(b) for a, b in zip(v, w, strict=True)]


def _signed_dictionaries(indices: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for perm in permutations(indices, 4):
        for signs in product((1, -1), repeat=4):
            yield tuple(s * p for s, p in zip(signs, perm, strict=True))


def find_basis_change(
    src: RealLieAlgebra, tgt: RealLieAlgebra, row: RowMatch | None = None
) -> tuple[ExactMatrix, bool] | None:
    """
    Basis change P with f = P alpha carrying ``tgt`` into ``src``.

    The row's dictionary is tried first; otherwise signed permutations onto
    e^1..e^4, then onto all of e^1..e^6. The flag reports whether a search ran.
    """
    if row is not None and row.dictionary is not None:
        q = solve_remaining_rows(src, tgt, _dictionary_rows(row.dictionary, row.scales))
        if q is not None:
            return q.inverse(), False
        logger.warning(f"Dictionary of row '{row.provenance}' did not fit; searching")
    for pool in ((1, 2, 3, 4), (1, 2, 3, 4, 5, 6)):
        for dictionary in _signed_dictionaries(pool):
            if pool[-1] == 6 and all(abs(i) <= 4 for i in dictionary):
                continue
            q = solve_remaining_rows(src, tgt, _dictionary_rows(dictionary, (1, 1, 1, 1)))
            if q is not None:
                logger.debug(f"Search found dictionary {dictionary}")
                return q.inverse(), True
    return None


def classify(params: SplittingParams) -> ClassificationResult:
    """Catalog label of the real Lie algebra underlying the splitting equations."""
    row = match_row(params)
    src = realify(splitting_coframe(params))
    raw = raw_algebra(row.raw_label)
    found = find_basis_change(src, raw, row)
    if found is None:
        raise InternalConsistencyError(
            f"No basis change realizes {row.raw_label} for {params} (row '{row.provenance}')"
        )
    to_raw, searched = found
    chain = normalize_label(row.raw_label)
    total = BasisChange(chain.total_change().matrix @ to_raw, "classification")
    final = chain.label
    if final.index != 10 and not final.in_range():
        raise InternalConsistencyError(f"Normalization of {row.raw_label} ended outside range: {final}")
    if not verify_isomorphism(src, raw_algebra(final), total):
        raise InternalConsistencyError(f"Composite change fails to verify for {params} -> {final}")
    invariants = None
    if params.family == Family.C2:
        invariants = case_invariants(params.A, params.B)
    logger.info(f"Classified {params} as {final} ({row.provenance})")
    return ClassificationResult(params, final, total, row, chain, invariants, searched)


def jc_splitting_params(C: ScalarInput) -> SplittingParams:
    """
    Splitting parameters of the Nakamura structure J_C after scaling omega^3.

    Scaling by conj(C) - i gives A = -(C - i)/(conj(C) - i), B = -1, eps = 1.
    """
    c = GaussianRational.coerce(C)
    scale = c.conjugate() - GaussianRational(0, 1)
    if not scale:
        raise ValidationError("J_C with C = -i has no (1,1) part and is not in the B = -1 gauge")
    a = -(c - GaussianRational(0, 1)) / scale
    return SplittingParams.c2(a, -1, 1)


def _random_rational(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_splitting_params(rng: random.Random, height: int) -> SplittingParams:
    """Random non-degenerate C2 parameters with rational parts of bounded height."""
    while True:
        a = GaussianRational(_random_rational(rng, height), _random_rational(rng, height))
        b = GaussianRational(_random_rational(rng, height), _random_rational(rng, height))
        eps = rng.randint(0, 1)
        # real A or B with probability 0.2 each
        if rng.random() < 0.2:
            a = GaussianRational(a.re)
        if rng.random() < 0.2:
            b = GaussianRational(b.re)
        if eps == 0 and not a and not b:
            continue
        return SplittingParams.c2(a, b, eps)


def classify_many(samples: int, seed: int, height: int) -> list[ClassificationResult]:
    """Classify a deterministic random sweep; degenerate draws are skipped."""
    rng = random.Random(seed)  # nosec B311 - deterministic sampling, not cryptography
    results = []
    for _ in range(samples):
        params = random_splitting_params(rng, height)
        try:
            results.append(classify(params))
        except DegenerateStructureError:
            logger.debug(f"Skipping degenerate sample {params}")
    return results
