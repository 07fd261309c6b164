"""Ordering-relation rewriting and the overlap (diamond lemma) confluence check.

A :class:`Presentation` holds a totally ordered generator list and one rule per
strictly decreasing pair ``I > J``; the rule's right-hand side is a left-coefficient
combination of ordered words of length at most two.  Rewriting replaces a
decreasing adjacent pair by that right-hand side until every word is ordered.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from .coeff import RatFunc
from .expr import parse, render_element
from .ncalg import Generator, NCElement, Word, concat, push_left, word_weight

DEFAULT_MAX_STEPS = 10**6
STRATEGIES = ("leftmost", "rightmost")


class InvalidPresentation(ValueError):
    pass


class IncompletePresentation(KeyError):
    def __str__(self):
        return f"incomplete presentation: no rule for {self.args[0]}"


class TerminationGuardTripped(RuntimeError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple[Generator, Generator]
    rhs: NCElement

    def lhs_element(self) -> NCElement:
        return NCElement.word(*self.lhs)


class Presentation:
    """Generators in increasing order together with the ordering rules."""

    def __init__(
        self,
        generators: Sequence[Generator],
        rules: Mapping[tuple[Generator, Generator], NCElement | RewriteRule],
        *,
        require_complete: bool = True,
        weight_compatible: bool = True,
        name: str = "",
    ):
        self.generators = tuple(generators)
        self.name = name
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InvalidPresentation(f"duplicate generator names in {names}")
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.rules: dict[tuple[Generator, Generator], RewriteRule] = {}
        for lhs, rhs in rules.items():
            rule = rhs if isinstance(rhs, RewriteRule) else RewriteRule(tuple(lhs), rhs)
            self._validate(rule)
            self.rules[rule.lhs] = rule
        if require_complete:
            missing = [
                (a.name, b.name) for a, b in self.decreasing_pairs() if (a, b) not in self.rules
            ]
            if missing:
                raise InvalidPresentation(f"incomplete presentation, missing rules for {missing}")
        if not weight_compatible:
            warnings.warn(
                f"generator order {names} is declared incompatible with the weights",
                stacklevel=2,
            )
        self._ordered_cache: dict[Word, bool] = {}

    def _validate(self, rule: RewriteRule):
        a, b = rule.lhs
        if a not in self.index or b not in self.index:
            raise InvalidPresentation(f"rule {a.name} {b.name} uses an unknown generator")
        if self.index[a] <= self.index[b]:
            raise InvalidPresentation(f"rule lhs {a.name} {b.name} is not a decreasing pair")
        mu = a.weight + b.weight
        for w in rule.rhs.terms:
            if len(w) > 2:
                raise InvalidPresentation(f"rule {a.name} {b.name}: rhs word longer than 2")
            if any(g not in self.index for g in w):
                raise InvalidPresentation(f"rule {a.name} {b.name}: unknown generator in rhs")
            if len(w) == 2 and self.index[w[0]] > self.index[w[1]]:
                raise InvalidPresentation(f"rule {a.name} {b.name}: rhs word is not ordered")
            if word_weight(w) != mu:
                raise InvalidPresentation(f"rule {a.name} {b.name}: rhs is not weight homogeneous")

    def decreasing_pairs(self) -> list[tuple[Generator, Generator]]:
        return [(b, a) for a, b in combinations(self.generators, 2)]

    def decreasing_triples(self) -> list[tuple[Generator, Generator, Generator]]:
        return [(c, b, a) for a, b, c in combinations(self.generators, 3)]

    def is_ordered(self, w: Word) -> bool:
        hit = self._ordered_cache.get(w)
        if hit is None:
            idx = self.index
            hit = all(idx[w[i]] <= idx[w[i + 1]] for i in range(len(w) - 1))
            self._ordered_cache[w] = hit
        return hit

    def word_key(self, w: Word) -> tuple:
        return tuple(self.index[g] for g in w)

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def with_rule(self, lhs: tuple[Generator, Generator], rhs: NCElement) -> "Presentation":
        """Copy with one rule replaced (used for mutation tests)."""
        rules = {k: r.rhs for k, r in self.rules.items()}
        rules[lhs] = rhs
        return Presentation(self.generators, rules, name=self.name + "*")

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.generators == other.generators and {
            k: r.rhs for k, r in self.rules.items()
        } == {k: r.rhs for k, r in other.rules.items()}

    def __repr__(self):
        return f"Presentation({[g.name for g in self.generators]}, {len(self.rules)} rules)"


# rewriting ---------------------------------------------------------------


def _pick(p: Presentation, terms: Mapping[Word, RatFunc], strategy: str):
    """Redex as (word, position), or None when every word is ordered."""
    unordered = [w for w in terms if not p.is_ordered(w)]
    if not unordered:
        return None
    idx = p.index
    if strategy == "leftmost":
        w = min(unordered, key=p.word_key)
        positions = range(len(w) - 1)
    elif strategy == "rightmost":
        w = max(unordered, key=p.word_key)
        positions = range(len(w) - 2, -1, -1)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    for i in positions:
        if idx[w[i]] > idx[w[i + 1]]:
            return w, i
    raise AssertionError("unordered word without a decreasing pair")


def _rewrite_at(p: Presentation, terms: dict, w: Word, i: int):
    rule = p.rules.get((w[i], w[i + 1]))
    if rule is None:
        raise IncompletePresentation(f"{w[i].name} {w[i + 1].name}")
    c = terms.pop(w)
    prefix, suffix = w[:i], w[i + 2 :]
    for rw, rc in rule.rhs.terms.items():
        nw = prefix + rw + suffix
        nc = c * push_left(rc, prefix)
        old = terms.get(nw)
        if old is not None:
            nc = old + nc
            if nc.is_zero():
                del terms[nw]
                continue
        terms[nw] = nc


def apply_once(
    p: Presentation, a: NCElement, strategy: str = "leftmost"
) -> tuple[NCElement, bool]:
    """One rewrite step; returns the new element and whether anything changed."""
    found = _pick(p, a.terms, strategy)
    if found is None:
        return a, False
    terms = dict(a.terms)
    _rewrite_at(p, terms, *found)
    return NCElement(terms), True


def normal_form(
    p: Presentation,
    a: NCElement,
    max_steps: int = DEFAULT_MAX_STEPS,
    strategy: str = "leftmost",
) -> NCElement:
    """Rewrite to a fixed point; every word of the result is ordered."""
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    terms = dict(a.terms)
    for _ in range(max_steps):
        found = _pick(p, terms, strategy)
        if found is None:
            return NCElement(terms)
        _rewrite_at(p, terms, *found)
    if _pick(p, terms, strategy) is None:
        return NCElement(terms)
    raise TerminationGuardTripped(f"termination guard tripped after {max_steps} steps")


def multiply(p: Presentation, a: NCElement, b: NCElement, **kw) -> NCElement:
    """Product in the presented algebra: concatenate, then normalize."""
    return normal_form(p, concat(a, b), **kw)


# confluence --------------------------------------------------------------


@dataclass
class TripleCheck:
    triple: tuple[str, str, str]
    left_first: NCElement
    right_first: NCElement

    @property
    def equal(self) -> bool:
        return self.left_first == self.right_first


@dataclass
class ConfluenceReport:
    triples: list[TripleCheck] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(t.equal for t in self.triples)


def resolve_overlap(
    p: Presentation, triple: tuple[Generator, Generator, Generator], **kw
) -> TripleCheck:
    a, b, c = triple
    left = concat(p.rules[(a, b)].rhs, NCElement.word(c))
    right = concat(NCElement.word(a), p.rules[(b, c)].rhs)
    return TripleCheck(
        (a.name, b.name, c.name), normal_form(p, left, **kw), normal_form(p, right, **kw)
    )


def check_confluence(p: Presentation, **kw) -> ConfluenceReport:
    for pair in p.decreasing_pairs():
        if pair not in p.rules:
            raise IncompletePresentation(f"{pair[0].name} {pair[1].name}")
    return ConfluenceReport([resolve_overlap(p, t, **kw) for t in p.decreasing_triples()])


# PBW basis ---------------------------------------------------------------


def enumerate_basis(p: Presentation, max_degree: int) -> list[Word]:
    """Ordered words of length <= max_degree, shortest first."""
    out: list[Word] = []
    for n in range(max_degree + 1):
        out.extend(combinations_with_replacement(p.generators, n))
    return out


def all_words(p: Presentation, length: int) -> list[Word]:
    return list(product(p.generators, repeat=length))


@dataclass
class Transition:
    basis: list[Word]
    rows: dict[Word, dict[int, RatFunc]]  # word -> {basis index: coefficient}

    def outside_span(self) -> list[Word]:
        n = len(self.basis)
        return [w for w, row in self.rows.items() if any(k >= n for k in row)]

    def identity_on_basis(self) -> bool:
        return all(self.rows[w] == {i: RatFunc.const(1)} for i, w in enumerate(self.basis))


def pbw_transition(p: Presentation, max_degree: int, **kw) -> Transition:
    """Normal form coordinates of every word of length <= max_degree in the ordered basis."""
    basis = enumerate_basis(p, max_degree)
    pos = {w: i for i, w in enumerate(basis)}
    rows = {}
    for n in range(max_degree + 1):
        for w in all_words(p, n):
            nf = normal_form(p, NCElement.word(*w), **kw)
            # an ordered word missing from the basis lands at len(basis), flagging it
            rows[w] = {pos.get(v, len(basis)): c for v, c in nf.terms.items()}
    return Transition(basis, rows)


# text format -------------------------------------------------------------


def dumps(p: Presentation) -> str:
    head = "generators: " + " ".join(f"{g.name}:{g.weight}" for g in p.generators)
    lines = [head]
    for lhs in sorted(p.rules, key=lambda k: (p.index[k[0]], p.index[k[1]])):
        rhs = render_element(p.rules[lhs].rhs, p.generators)
        lines.append(f"{lhs[0].name} {lhs[1].name} -> {rhs}")
    return "\n".join(lines) + "\n"


def loads(text: str, **kw) -> Presentation:
    generators: list[Generator] | None = None
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            generators = []
            for tok in line[len("generators:") :].split():
                name, _, weight = tok.rpartition(":")
                if not name:
                    raise InvalidPresentation(f"line {lineno}: expected name:weight, got {tok!r}")
                generators.append(Generator(name, int(weight)))
            continue
        if generators is None:
            raise InvalidPresentation(f"line {lineno}: rule before the generators line")
        if "->" not in line:
            raise InvalidPresentation(f"line {lineno}: expected 'I J -> expression'")
        lhs, rhs = line.split("->", 1)
        names = lhs.split()
        if len(names) != 2:
            raise InvalidPresentation(f"line {lineno}: lhs must be two generators")
        by_name = {g.name: g for g in generators}
        try:
            key = (by_name[names[0]], by_name[names[1]])
        except KeyError as e:
            raise InvalidPresentation(f"line {lineno}: unknown generator {e.args[0]}") from None
        rules[key] = parse(rhs.strip(), generators)
    if generators is None:
        raise InvalidPresentation("missing generators line")
    return Presentation(generators, rules, **kw)


def load(path, **kw) -> Presentation:
    with open(path) as fh:
        return loads(fh.read(), **kw)


def iter_rules(p: Presentation) -> Iterable[RewriteRule]:
    return (p.rules[k] for k in sorted(p.rules, key=lambda k: (p.index[k[0]], p.index[k[1]])))
