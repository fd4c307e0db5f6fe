"""
The finite double complexes B and C = B + conj(B) of the Nakamura structures.

B^{p,q} is spanned by the products phi^I ∧ phi~^J whose character beta_I gamma_J
is trivial on Γ'_C. Generators are exponential monomials, so membership and
the ∂, ∂̄ matrices are read off by matching (exponent, covector) pairs.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from ..cohomology.double_complex import Bidegree, DoubleComplex
from ..domain.gaussian import I_UNIT, ONE, ZERO, GaussianRational
from ..domain.matrix import ExactMatrix
from ..utilities.constants import COMPLEX_DIMENSION, ClosureError, InternalConsistencyError
from .character_form import CharacterForm, MonomialKey, bidegree_of_key
from .characters import Character, NakamuraParams, char_restriction_trivial, characters, odd_class_c

logger = logging.getLogger(__name__)

_CONJUGATE_TOKEN = {"1": "b1", "2": "b2", "3": "b3", "~1": "b~1", "~2": "b~2"}
_CONJUGATE_TOKEN.update({v: k for k, v in _CONJUGATE_TOKEN.items()})


@dataclass(frozen=True)
class Factor:
    """One of phi^1, phi^2, phi^3, phi~^1, phi~^2, conj(phi^3)."""

    token: str
    covector: int
    exponent: Character
    character: Character


@dataclass(frozen=True)
class Generator:
    """A basis monomial of B or C, labelled like ``phi^1~2``."""

    label: str
    tokens: tuple[str, ...]
    form: CharacterForm
    character: Character

    @property
    def monomial(self) -> tuple[MonomialKey, GaussianRational]:
        ((key, coeff),) = tuple(self.form.items())
        return key, coeff

    @property
    def bidegree(self) -> Bidegree:
        return bidegree_of_key(self.monomial[0][1])


def factors(C: GaussianRational) -> tuple[Factor, ...]:
    """The six one-form factors; kappa = C + conj(C) - 2i."""
    chars = characters(C)
    kappa = Character(C + C.conjugate() - 2 * I_UNIT, 0)
    trivial = Character()
    return (
        Factor("1", 0, kappa, chars["beta1"]),
        Factor("2", 1, kappa.inverse(), chars["beta2"]),
        Factor("3", 2, trivial, trivial),
        Factor("~1", 3, kappa, chars["gamma1"]),
        Factor("~2", 4, kappa.inverse(), chars["gamma2"]),
        Factor("b3", 5, trivial, trivial),
    )


def _label(tokens: Sequence[str]) -> str:
    return "phi^" + "".join(tokens) if tokens else "1"


def _product(chosen: Sequence[Factor]) -> Generator:
    form = CharacterForm.constant(ONE)
    character = Character()
    for factor in chosen:
        form = form.wedge(CharacterForm.factor(factor.exponent, factor.covector))
        character = character * factor.character
    tokens = tuple(f.token for f in chosen)
    return Generator(_label(tokens), tokens, form, character)


def b_generators(params: NakamuraParams) -> list[Generator]:
    """Generators of B in (p, q) order, each a single exponential monomial."""
    holo, anti = factors(params.C)[:3], factors(params.C)[3:]
    generators = []
    for p in range(COMPLEX_DIMENSION + 1):
        for q in range(COMPLEX_DIMENSION + 1):
            for left in combinations(holo, p):
                for right in combinations(anti, q):
                    generator = _product(left + right)
                    if char_restriction_trivial(generator.character, params.C):
                        generators.append(generator)
    return generators


def conjugate_generator(generator: Generator) -> Generator:
    """The conjugate monomial, with tokens renamed and reordered."""
    form = generator.form.conjugate()
    shifted = [
        (i + 3 if i < 3 else i - 3, _CONJUGATE_TOKEN[token])
        for i, token in zip(_token_covectors(generator), generator.tokens, strict=True)
    ]
    tokens = tuple(token for _, token in sorted(shifted))
    return Generator(_label(tokens), tokens, form, generator.character.conjugate())


def _token_covectors(generator: Generator) -> list[int]:
    return list(generator.monomial[0][1])


def c_generators(params: NakamuraParams) -> list[Generator]:
    """B plus the conjugates not already spanned by B."""
    generators = b_generators(params)
    seen = {g.monomial[0] for g in generators}
    extras = []
    for generator in generators:
        image = conjugate_generator(generator)
        key = image.monomial[0]
        if key not in seen:
            seen.add(key)
            extras.append(image)
    return generators + extras


def _assemble(name: str, generators: list[Generator], t: GaussianRational) -> DoubleComplex:
    n = COMPLEX_DIMENSION
    bases: dict[Bidegree, list[Generator]] = {}
    for generator in generators:
        bases.setdefault(generator.bidegree, []).append(generator)
    index: dict[MonomialKey, tuple[Bidegree, int, GaussianRational]] = {}
    for bidegree, group in bases.items():
        for i, generator in enumerate(group):
            key, coeff = generator.monomial
            index[key] = (bidegree, i, coeff)

    del_: dict[Bidegree, ExactMatrix] = {}
    delbar: dict[Bidegree, ExactMatrix] = {}
    for (p, q), group in bases.items():
        targets = {(p + 1, q): del_, (p, q + 1): delbar}
        columns: dict[Bidegree, list[list[GaussianRational]]] = {
            target: [] for target in targets
        }
        for generator in group:
            image = generator.form.d(t)
            vectors = {
                target: [ZERO] * len(bases.get(target, []))
                for target in targets
            }
            for key, coeff in image.items():
                if key not in index:
                    raise ClosureError(f"d({generator.label}) leaves the span of {name}: {key}")
                bidegree, i, basis_coeff = index[key]
                vectors[bidegree][i] = vectors[bidegree][i] + coeff / basis_coeff
            for target in targets:
                columns[target].append(vectors[target])
        for target, store in targets.items():
            rows = len(bases.get(target, []))
            if max(target) <= n:
                store[(p, q)] = ExactMatrix.from_columns(columns[target], rows=rows)

    conjugation: dict[str, str] = {}
    for group in bases.values():
        for generator in group:
            image_key = conjugate_generator(generator).monomial[0]
            if image_key in index:
                bidegree, i, _ = index[image_key]
                conjugation[generator.label] = bases[bidegree][i].label
    labels = {bidegree: [g.label for g in group] for bidegree, group in bases.items()}
    return DoubleComplex(n, labels, del_, delbar, conjugation, name=name)


def build_complexes(params: NakamuraParams) -> tuple[DoubleComplex, DoubleComplex]:
    """The complexes (B, C) for the given C and deformation parameter t."""
    b = _assemble(f"B({params})", b_generators(params), params.t)
    c = _assemble(f"C({params})", c_generators(params), params.t)
    logger.info(f"Built Nakamura complexes for {params}: dim B = {_total(b)}, dim C = {_total(c)}")
    return b, c


def _total(dc: DoubleComplex) -> int:
    return sum(dc.dimensions().values())


def complexes_agree_across_k(t: GaussianRational, ks: Sequence[int] = (-1, 0, 1)) -> bool:
    """B and C for C_k = i/(2k+1) coincide as labelled matrix data for all k in ``ks``."""
    built = [build_complexes(NakamuraParams(odd_class_c(k), t)) for k in ks]
    reference = built[0]
    for k, pair in zip(ks[1:], built[1:], strict=True):
        for ref, other in zip(reference, pair, strict=True):
            if ref.bases != other.bases or ref.del_ != other.del_ or ref.delbar != other.delbar:
                logger.info(f"Complexes for k={k} differ from k={ks[0]}")
                return False
    return True


def require_closed(dc: DoubleComplex) -> None:
    """Raise if conjugation does not pair (p, q) with (q, p)."""
    if not dc.conjugation_closed():
        raise InternalConsistencyError(f"{dc!r} is not closed under conjugation")
