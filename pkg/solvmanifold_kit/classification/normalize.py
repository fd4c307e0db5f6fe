"""
Reduction of catalog parameters to their canonical ranges.

Every step carries the basis change between the raw algebras it connects;
``normalize_label`` checks each one with ``verify_isomorphism``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..lie.basis_change import BasisChange, appendix_change, verify_isomorphism
from ..lie.catalog import CatalogLabel, label, raw_algebra
from ..utilities.constants import REAL_DIMENSION, InternalConsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizationStep:
    """One reduction: ``source`` is carried onto ``target`` by ``change``."""

    source: CatalogLabel
    target: CatalogLabel
    change: BasisChange

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} via {self.change.name}"


@dataclass(frozen=True)
class NormalizationChain:
    """Canonical label plus the steps leading to it."""

    start: CatalogLabel
    label: CatalogLabel
    steps: tuple[NormalizationStep, ...] = field(default_factory=tuple)

    def total_change(self) -> BasisChange:
        """Composite change from the raw start algebra to the canonical one."""
        total = BasisChange.identity(REAL_DIMENSION)
        for step in self.steps:
            total = step.change.compose(total)
        return total

    def change_names(self) -> list[str]:
        return [step.change.name for step in self.steps]


def _relabel() -> BasisChange:
    return BasisChange.identity(REAL_DIMENSION)


def _next_step(current: CatalogLabel) -> tuple[CatalogLabel, BasisChange] | None:
    """One reduction, or None when already canonical."""
    a = current.alpha if current.alpha is not None else Fraction(0)
    b = current.beta if current.beta is not None else Fraction(0)
    match current.index:
        case 5:
            if a == 0:
                return label(4), appendix_change("ChA")
            if a < 0:
                return label(5, -a), appendix_change("ChB")
        case 6:
            if a < 0:
                return label(6, -a, b), appendix_change("ChC")
            if b < 0:
                return label(6, a, -b), appendix_change("ChD")
            if a == 0:
                return label(7, b), _relabel()
            if b == 0:
                return label(5, 1 / a), appendix_change("ChE", a)
            if b == 1:
                return label(8, a), _relabel()
            if b > 1:
                return label(6, a / b, 1 / b), appendix_change("ChE", b)
        case 7:
            if a == 0:
                return label(2), appendix_change("ChF")
            if a < 0:
                return label(7, -a), appendix_change("ChD")
            if a > 1:
                return label(7, 1 / a), appendix_change("ChE", a)
        case 8:
            if a == 0:
                return label(7, 1), _relabel()
            if a < 0:
                return label(8, -a), appendix_change("ChC")
        case 11:
            if a == 0:
                return label(9), appendix_change("ChG")
            if a < 0:
                return label(11, -a), appendix_change("ChB")
            if a == 1:
                # s11^{-1} is literally s12
                return label(12), appendix_change("ChB")
            if a > 1:
                return label(11, 1 / a), appendix_change("ChH", a)
    return None


def normalize_label(raw: CatalogLabel, check: bool = True) -> NormalizationChain:
    """Apply reductions until the parameters lie in the canonical ranges."""
    current = raw
    steps: list[NormalizationStep] = []
    while (nxt := _next_step(current)) is not None:
        target, change = nxt
        if check and not verify_isomorphism(raw_algebra(current), raw_algebra(target), change):
            raise InternalConsistencyError(f"Reduction {current} -> {target} does not verify")
        steps.append(NormalizationStep(current, target, change))
        logger.debug(f"Normalized {current} -> {target} via {change.name}")
        current = target
    if not current.in_range():
        # s10 has no reduction; its raw parameters are kept
        logger.debug(f"{current} left outside the canonical range")
    return NormalizationChain(raw, current, tuple(steps))


def normalized(
    index: int, alpha: Fraction | int | None = None, beta: Fraction | int | None = None
) -> CatalogLabel:
    """Canonical label for raw parameters."""
    return normalize_label(label(index, alpha, beta)).label
