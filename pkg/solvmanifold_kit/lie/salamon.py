"""
Salamon-notation parser and renderer.

Grammar (whitespace ignored)::

    algebra := "(" slot ("," slot)* ")"
    slot    := "0" | term (("+" | "-") term)*
    term    := [coeff ["*"]] "e^{" digit digit "}"
    coeff   := integer | integer "/" integer | "(" integer ["/" integer] ")"

``e^{ji}`` with j > i is read as ``-e^{ij}``.
"""

import re
from fractions import Fraction

from ..geometry.forms import Form
from ..utilities.constants import ParseError
from .algebra import RealLieAlgebra

_TERM_RE = re.compile(
    r"(?P<sign>[+-])?"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\*?|\((?P<pcoeff>[+-]?\d+(?:/\d+)?)\)\*?)?"
    r"e\^\{(?P<i>\d)(?P<j>\d)\}"
)


def parse_salamon(text: str) -> RealLieAlgebra:
    """Parse ``(e^{23}, e^{34}, -e^{24},0,0,0)`` into structure equations."""
    compact = "".join(text.split())
    if len(compact) < 2 or compact[0] != "(" or compact[-1] != ")":
        raise ParseError(f"Salamon text must be parenthesized: {text!r}")
    slots = compact[1:-1].split(",")
    dim = len(slots)
    forms = [_parse_slot(slot, k, dim) for k, slot in enumerate(slots)]
    return RealLieAlgebra(forms)


def _parse_slot(slot: str, k: int, dim: int) -> Form:
    if slot == "0":
        return Form.zero()
    if not slot:
        raise ParseError(f"Empty slot {k + 1}")
    pos = 0
    terms: dict[tuple[int, int], Fraction] = {}
    while pos < len(slot):
        match = _TERM_RE.match(slot, pos)
        if match is None:
            raise ParseError(f"Malformed term in slot {k + 1} at {slot[pos:]!r}")
        if pos > 0 and match.group("sign") is None:
            raise ParseError(f"Missing sign between terms in slot {k + 1}: {slot!r}")
        i, j = int(match.group("i")), int(match.group("j"))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"Index out of range in e^{{{i}{j}}} for dimension {dim}")
        if i == j:
            raise ParseError(f"Repeated index in e^{{{i}{j}}}")
        raw = match.group("coeff") or match.group("pcoeff") or "1"
        try:
            coeff = Fraction(raw)
        except ZeroDivisionError as e:
            raise ParseError(f"Zero denominator in slot {k + 1}") from e
        if match.group("sign") == "-":
            coeff = -coeff
        if i > j:
            i, j, coeff = j, i, -coeff
        key = (i - 1, j - 1)
        if key in terms:
            raise ParseError(f"Duplicate term e^{{{i}{j}}} in slot {k + 1}")
        terms[key] = coeff
        pos = match.end()
    return Form(terms)


def _render_slot(form: Form) -> str:
    if form.is_zero():
        return "0"
    text = ""
    for key, coeff in form.items():
        token = "e^{" + "".join(str(i + 1) for i in key) + "}"
        magnitude = abs(coeff)
        if magnitude == 1:
            body = token
        elif magnitude.denominator == 1:
            body = f"{magnitude}{token}"
        else:
            body = f"({magnitude}){token}"
        if coeff < 0:
            text += f"-{body}"
        else:
            text += f"+{body}" if text else body
    return text


def render_salamon(g: RealLieAlgebra) -> str:
    """Canonical text: slots joined by ``", "``, terms in index order."""
    return "(" + ", ".join(_render_slot(form) for form in g.diff) + ")"
