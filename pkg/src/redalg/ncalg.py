"""Weight-graded words and elements with left coefficients in the h-field.

``h`` is not a letter: it lives in the coefficients, and moving a coefficient
from the right of a word ``w`` to its left replaces ``h`` by ``h - weight(w)``
(because ``[h, g] = weight(g) * g`` for every generator ``g``).
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .coeff import ONE, RatFunc, Scalar, shift


class Generator(NamedTuple):
    name: str
    weight: int

    def __str__(self):
        return self.name


Word = tuple  # tuple[Generator, ...]; the empty tuple is the unit word

MIXED = "mixed"


def word_weight(w: Word) -> int:
    return sum(g.weight for g in w)


def push_left(f: RatFunc, w: Word) -> RatFunc:
    """Coefficient ``f'`` with ``w * f == f' * w``."""
    return shift(f, -word_weight(w))


def word_str(w: Word) -> str:
    return " ".join(g.name for g in w) if w else "1"


class NCElement:
    """Finite sum of ``coefficient * word`` with the coefficient on the left."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, RatFunc] | Iterable[tuple[Word, RatFunc]] = ()):
        acc: dict[Word, RatFunc] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            c = RatFunc.coerce(c)
            w = tuple(w)
            if w in acc:
                c = acc[w] + c
            acc[w] = c
        self.terms = {w: c for w, c in acc.items() if not c.is_zero()}

    @classmethod
    def scalar(cls, c: RatFunc | Scalar) -> "NCElement":
        return cls({(): RatFunc.coerce(c)})

    @classmethod
    def word(cls, *gens: Generator, coeff: RatFunc | Scalar = 1) -> "NCElement":
        return cls({tuple(gens): RatFunc.coerce(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return NCElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return NCElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return concat(self, other)

    def __rmul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return concat(other, self)

    def scale(self, f: RatFunc | Scalar) -> "NCElement":
        """Left multiplication by a coefficient."""
        f = RatFunc.coerce(f)
        return NCElement({w: f * c for w, c in self.terms.items()})

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def words(self) -> list[Word]:
        return list(self.terms)

    def __repr__(self):
        if not self.terms:
            return "NCElement(0)"
        body = " + ".join(f"({c})*[{word_str(w)}]" for w, c in self.terms.items())
        return f"NCElement({body})"


def _lift(x):
    if isinstance(x, NCElement):
        return x
    try:
        return NCElement.scalar(RatFunc.coerce(x))
    except TypeError:
        return NotImplemented


def concat(a: NCElement, b: NCElement) -> NCElement:
    """Raw product: concatenate words, pushing b's coefficients left across a's words."""
    out = []
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            out.append((wa + wb, ca * push_left(cb, wa)))
    return NCElement(out)


def weight_of(a: NCElement) -> int | str:
    """Common h-weight of every word, or ``"mixed"``. The zero element has weight 0."""
    weights = {word_weight(w) for w in a.terms}
    if len(weights) > 1:
        return MIXED
    return weights.pop() if weights else 0


def weight_components(a: NCElement) -> dict[int, NCElement]:
    parts: dict[int, dict] = {}
    for w, c in a.terms.items():
        parts.setdefault(word_weight(w), {})[w] = c
    return {mu: NCElement(t) for mu, t in sorted(parts.items())}


def scalar(c: RatFunc | Scalar) -> NCElement:
    return NCElement.scalar(c)


def gen(g: Generator) -> NCElement:
    return NCElement.word(g)


NC_ZERO = NCElement()
NC_ONE = NCElement.scalar(ONE)

