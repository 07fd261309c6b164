"""The diagonal reduction algebra DR(sl(2)) and its property probes.

Generators ``z-`` (weight -2), ``t`` (weight 0), ``z+`` (weight 2), ordered
``z- < t < z+``.  The defining relations are written with coefficients on the
right::

    z+ t  = t z+ (h+4)/(h+2)
    z+ z- = z- z+ h(h+3)/((h+1)(h+2)) - t^2 / h + h
    t z-  = z- t (h+2)/h

and are converted to left-coefficient rules by ``push_left``.

Sign convention: ``[h, z-] = -2 z-``.  Written as ``[h, z-] = 2 z-`` the weight
relations would contradict both ``z- : v_j -> v_(j-1)`` with ``alpha_j = alpha_(j-1) + 2``
and the realization ``z- -> x^-1, h -> 2E``; only weight -2 fits all three.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .coeff import RatFunc, degree, symbol
from .ncalg import Generator, NCElement, concat, weight_of
from .report import Report
from .rewrite import Presentation, normal_form

ZM = Generator("z-", -2)
T = Generator("t", 0)
ZP = Generator("z+", 2)
GENERATORS = (ZM, T, ZP)

SIGN_CONVENTION = "[h, z+] = 2 z+, [h, t] = 0, [h, z-] = -2 z- (z- has weight -2, not +2)"

h = RatFunc.var("h")


def _w(*gens) -> NCElement:
    return NCElement.word(*gens)


def _s(c) -> NCElement:
    return NCElement.scalar(c)


def defining_relations() -> dict[tuple[Generator, Generator], NCElement]:
    """Right-hand sides exactly as right-coefficient formulas, pushed left by concat."""
    return {
        (ZP, T): concat(_w(T, ZP), _s((h + 4) / (h + 2))),
        (ZP, ZM): concat(_w(ZM, ZP), _s(h * (h + 3) / ((h + 1) * (h + 2))))
        - concat(_w(T, T), _s(1 / h))
        + _s(h),
        (T, ZM): concat(_w(ZM, T), _s((h + 2) / h)),
    }


def casimir1() -> NCElement:
    return _s(h + 2) * _w(T)


def casimir2() -> NCElement:
    c2 = (
        concat(_w(ZM, ZP), _s((h + 3) / (h + 2)))
        + concat(_w(T, T), _s(Fraction(1, 4)))
        + _s(h * (h + 4) / 4)
    )
    assert weight_of(c2) == 0
    return c2


@dataclass(frozen=True)
class DrSl2:
    presentation: Presentation
    c1: NCElement
    c2: NCElement

    @property
    def generators(self):
        return self.presentation.generators

    def nf(self, a: NCElement, **kw) -> NCElement:
        return normal_form(self.presentation, a, **kw)

    def mul(self, a: NCElement, b: NCElement, **kw) -> NCElement:
        return normal_form(self.presentation, concat(a, b), **kw)


_BUILT: DrSl2 | None = None


def build() -> DrSl2:
    global _BUILT
    if _BUILT is None:
        pres = Presentation(GENERATORS, defining_relations(), name="DR(sl(2))")
        _BUILT = DrSl2(pres, casimir1(), casimir2())
    return _BUILT


def commutator(a: NCElement, b: NCElement, p: Presentation | None = None, **kw) -> NCElement:
    p = p or build().presentation
    return normal_form(p, concat(a, b) - concat(b, a), **kw)


# graded symbol -----------------------------------------------------------


def rule_symbol_entry(lhs: tuple[Generator, Generator], rhs: NCElement) -> dict:
    """Swap coefficient must have degree 0 and symbol 1; other quadratic terms lower degree."""
    swap = (lhs[1], lhs[0])
    entry = {"rule": f"{lhs[0].name} {lhs[1].name}", "swap_word": f"{swap[0].name} {swap[1].name}"}
    c = rhs.terms.get(swap)
    if c is None:
        entry.update(passed=False, reason="swap term missing")
        return entry
    deg, sym = degree(c), symbol(c)
    others = {
        " ".join(g.name for g in w): degree(x)
        for w, x in rhs.terms.items()
        if len(w) == 2 and w != swap
    }
    entry.update(
        coefficient=str(c),
        degree=deg,
        symbol=str(sym),
        other_quadratic_degrees=others,
        passed=deg == 0 and sym == 1 and all(d < 0 for d in others.values()),
    )
    return entry


def graded_symbol_check(p: Presentation | None = None) -> Report:
    p = p or build().presentation
    rep = Report("graded-symbol-check")
    for lhs, rule in p.rules.items():
        e = rule_symbol_entry(lhs, rule.rhs)
        rep.add(f"rule {e['rule']}", e["passed"], e)
    return rep


# zero divisor probe ------------------------------------------------------


def random_coefficient(rng: random.Random, with_h: bool = True) -> RatFunc:
    """Nonzero coefficient: a small rational, or a linear polynomial in h."""
    c = RatFunc.const(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)))
    if with_h and rng.random() < 0.5:
        c = c * (h + rng.randint(-3, 3))
    return c


def random_element(
    rng: random.Random,
    max_deg: int,
    p: Presentation | None = None,
    max_terms: int = 3,
    ordered: bool = True,
    with_h: bool = True,
) -> NCElement:
    """Random nonzero element; ordered words only when ``ordered`` (normal form input)."""
    p = p or build().presentation
    gens = p.generators
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            n = rng.randint(0, max_deg)
            w = [rng.choice(gens) for _ in range(n)]
            if ordered:
                w.sort(key=p.index.__getitem__)
            terms.append((tuple(w), random_coefficient(rng, with_h)))
        a = NCElement(terms)
        if not a.is_zero():
            return a


def zero_divisor_probe(seed: int = 0, trials: int = 200, max_deg: int = 3, **kw) -> Report:
    if trials <= 0:
        raise ValueError("trials must be positive")
    d = build()
    rng = random.Random(seed)
    rep = Report("zero-divisor-probe", meta={"seed": seed, "trials": trials, "max_deg": max_deg})
    failures = []
    for k in range(trials):
        a = random_element(rng, max_deg)
        b = random_element(rng, max_deg)
        if d.mul(a, b, **kw).is_zero():
            failures.append({"trial": k, "a": repr(a), "b": repr(b)})
    rep.add(f"{trials} products nonzero", not failures, {"counterexamples": failures})
    return rep
