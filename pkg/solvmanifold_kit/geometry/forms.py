"""
Sparse exterior forms with exact coefficients.

A form is a map from strictly increasing generator-index tuples to nonzero
scalars. Real Lie algebras use generators 0..dim-1 (the e^k); complex coframes
of dimension n use 0..n-1 for omega^k and n..2n-1 for their conjugates.
"""

from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from itertools import combinations
from typing import Any

from ..domain.gaussian import GaussianRational
from ..domain.matrix import Scalar, conj

Key = tuple[int, ...]


def sort_with_sign(indices: Sequence[int]) -> tuple[int, Key]:
    """Sort generator indices, returning (sign, sorted tuple); sign 0 on repeats."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


def wedge_keys(left: Key, right: Key) -> tuple[int, Key]:
    """Sign and key of e_left ∧ e_right for sorted keys."""
    if set(left) & set(right):
        return 0, ()
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


class Form:
    """Immutable sparse exterior form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], Any] | None = None) -> None:
        """Create from a map of (possibly unsorted) index tuples to coefficients."""
        merged: dict[Key, Any] = {}
        for indices, coeff in (terms or {}).items():
            if not coeff:
                continue
            sign, key = sort_with_sign(indices)
            if sign == 0:
                continue
            value = coeff if sign > 0 else -coeff
            merged[key] = merged[key] + value if key in merged else value
        self._terms: dict[Key, Any] = {
            k: (Fraction(v) if isinstance(v, int) else v) for k, v in merged.items() if v
        }

    @classmethod
    def _raw(cls, terms: dict[Key, Any]) -> "Form":
        form = cls.__new__(cls)
        form._terms = {k: v for k, v in terms.items() if v}
        return form

    @classmethod
    def zero(cls) -> "Form":
        return cls._raw({})

    @classmethod
    def constant(cls, value: Any) -> "Form":
        return cls({(): value})

    @classmethod
    def generator(cls, index: int, coeff: Any = 1) -> "Form":
        return cls({(index,): coeff})

    @classmethod
    def monomial(cls, indices: Sequence[int], coeff: Any = 1) -> "Form":
        return cls({tuple(indices): coeff})

    def terms(self) -> dict[Key, Any]:
        """Copy of the coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, Any]]:
        return iter(sorted(self._terms.items()))

    def keys(self) -> list[Key]:
        return sorted(self._terms)

    def coefficient(self, indices: Sequence[int]) -> Any:
        """Coefficient of the monomial with the given (possibly unsorted) indices."""
        sign, key = sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        value = self._terms.get(key)
        if value is None:
            return Fraction(0)
        return value if sign > 0 else -value

    def degrees(self) -> set[int]:
        return {len(k) for k in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Form):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return False

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Form") -> "Form":
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return Form._raw(terms)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form._raw({k: -v for k, v in self._terms.items()})

    def scale(self, factor: Any) -> "Form":
        """Multiply by a scalar."""
        if not factor:
            return Form.zero()
        return Form._raw({k: v * factor for k, v in self._terms.items()})

    def __mul__(self, factor: Any) -> "Form":
        if isinstance(factor, Form):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def wedge(self, other: "Form") -> "Form":
        """Exterior product."""
        terms: dict[Key, Any] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                sign, key = wedge_keys(k1, k2)
                if sign == 0:
                    continue
                value = v1 * v2 if sign > 0 else -(v1 * v2)
                terms[key] = terms[key] + value if key in terms else value
        return Form._raw(terms)

    def __xor__(self, other: "Form") -> "Form":
        return self.wedge(other)

    def power(self, k: int) -> "Form":
        """k-th exterior power."""
        result = Form.constant(1)
        for _ in range(k):
            result = result.wedge(self)
        return result

    def filter(self, keep: Callable[[Key], bool]) -> "Form":
        """Keep only monomials whose key satisfies the predicate."""
        return Form._raw({k: v for k, v in self._terms.items() if keep(k)})

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "Form":
        return Form._raw({k: fn(v) for k, v in self._terms.items()})

    def derivation(self, images: Sequence["Form"]) -> "Form":
        """
        Apply the odd derivation with d(x_k) = images[k] (images of even degree).

        Constants are annihilated.
        """
        terms: dict[Key, Any] = {}
        for key, coeff in self._terms.items():
            for pos, gen in enumerate(key):
                image = images[gen]
                if image.is_zero():
                    continue
                sign_pos = -1 if pos % 2 else 1
                prefix, suffix = key[:pos], key[pos + 1 :]
                for img_key, img_coeff in image._terms.items():
                    s1, k1 = wedge_keys(prefix, img_key)
                    if s1 == 0:
                        continue
                    s2, k2 = wedge_keys(k1, suffix)
                    if s2 == 0:
                        continue
                    value = coeff * img_coeff
                    if sign_pos * s1 * s2 < 0:
                        value = -value
                    terms[k2] = terms[k2] + value if k2 in terms else value
        return Form._raw(terms)

    def substitute(self, images: Sequence["Form"]) -> "Form":
        """Pull back along the linear substitution x_k -> images[k] (1-forms)."""
        result: dict[Key, Any] = {}
        for key, coeff in self._terms.items():
            product = Form.constant(coeff)
            for gen in key:
                product = product.wedge(images[gen])
                if product.is_zero():
                    break
            for k, v in product._terms.items():
                result[k] = result[k] + v if k in result else v
        return Form._raw(result)

    def __repr__(self) -> str:
        body = " + ".join(f"({v})e{''.join(str(i + 1) for i in k)}" for k, v in self.items())
        return f"Form({body or '0'})"


# Complex bidegree helpers; n is the complex dimension.


def bidegree_of(key: Key, n: int) -> tuple[int, int]:
    """(p, q) type of a monomial key."""
    q = sum(1 for i in key if i >= n)
    return len(key) - q, q


def bidegree_part(form: Form, n: int, p: int, q: int) -> Form:
    """Component of type (p, q)."""
    return form.filter(lambda key: bidegree_of(key, n) == (p, q))


def bidegrees(form: Form, n: int) -> set[tuple[int, int]]:
    return {bidegree_of(k, n) for k, _ in form.items()}


def conjugate_form(form: Form, n: int) -> Form:
    """Complex conjugate: omega^k <-> conj(omega^k), coefficients conjugated."""
    swapped: dict[tuple[int, ...], Any] = {}
    for key, coeff in form.items():
        image = tuple(i + n if i < n else i - n for i in key)
        sign, sorted_key = sort_with_sign(image)
        value = conj(coeff)
        swapped[sorted_key] = value if sign > 0 else -value
    return Form(swapped)


def complex_monomial(holo: Sequence[int], anti: Sequence[int], n: int, coeff: Any = 1) -> Form:
    """omega^{holo} ∧ conj(omega)^{anti}, 1-based indices as in the structure equations."""
    return Form.monomial([i - 1 for i in holo] + [j - 1 + n for j in anti], coeff)


def to_gaussian(form: Form) -> Form:
    """Coerce all coefficients into Q(i)."""
    return form.map_coefficients(GaussianRational.coerce)


def render_complex_form(form: Form, n: int, prefix: str = "w") -> str:
    """Text such as ``A*w13 + B*w1~3``; ``~`` marks a conjugated index."""
    if form.is_zero():
        return "0"
    parts: list[str] = []
    for key, coeff in form.items():
        holo = "".join(str(i + 1) for i in key if i < n)
        anti = "".join(f"~{i - n + 1}" for i in key if i >= n)
        token = f"{prefix}{holo}{anti}" if key else ""
        parts.append(_coefficient_prefix(coeff, token))
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def render_real_form(form: Form, prefix: str = "e") -> str:
    """Text such as ``e^{16}-e^{25}`` for real 2-forms."""
    if form.is_zero():
        return "0"
    parts: list[str] = []
    for key, coeff in form.items():
        token = f"{prefix}^{{{''.join(str(i + 1) for i in key)}}}"
        parts.append(_coefficient_prefix(coeff, token))
    return " + ".join(parts).replace("+ -", "- ")


def _coefficient_prefix(coeff: Scalar, token: str) -> str:
    if not token:
        return str(coeff)
    if coeff == 1:
        return token
    if coeff == -1:
        return f"-{token}"
    text = str(coeff)
    if isinstance(coeff, GaussianRational) and coeff.re != 0 and coeff.im != 0:
        text = f"({text})"
    return f"{text}*{token}"


def bidegree_basis(n: int, p: int, q: int) -> list[Key]:
    """Monomial keys of type (p, q), holomorphic indices first."""
    return [
        holo + tuple(n + j for j in anti)
        for holo in combinations(range(n), p)
        for anti in combinations(range(n), q)
    ]


def coordinates(form: Form, basis: Sequence[Key]) -> list[GaussianRational]:
    """Coefficients of ``form`` along ``basis``; terms outside the basis raise ValueError."""
    index = {key: i for i, key in enumerate(basis)}
    vector = [GaussianRational(0)] * len(basis)
    for key, coeff in form.items():
        if key not in index:
            raise ValueError(f"Monomial {key} lies outside the given basis")
        vector[index[key]] = GaussianRational.coerce(coeff)
    return vector


def from_coordinates(vector: Sequence[Any], basis: Sequence[Key]) -> Form:
    return Form({key: c for key, c in zip(basis, vector, strict=True) if c})
