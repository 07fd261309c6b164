import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from redalg.coeff import RING, VARIABLES, RatFunc, to_fraction
from redalg.drsl2 import build
from redalg.ncalg import NCElement

h = RatFunc.var("h")


def eval_poly(p, point):
    """Plain Fraction evaluation of a ring element; shares nothing with the gcd path."""
    total = Fraction(0)
    for monom, c in p.iterterms():
        term = to_fraction(c)
        for name, e in zip(VARIABLES, monom):
            if e:
                term *= Fraction(point[name]) ** e
        total += term
    return total


def eval_rat(f, point):
    den = eval_poly(f.den, point)
    assert den != 0, "evaluation point hits a pole"
    return eval_poly(f.num, point) / den


POINTS = [
    {"h": Fraction(7, 3), "nu": Fraction(-2, 5), "zeta": Fraction(3), "M": Fraction(1, 7), "j": Fraction(11)},
    {"h": Fraction(-13, 2), "nu": Fraction(5), "zeta": Fraction(-1, 3), "M": Fraction(9, 4), "j": Fraction(-3)},
    {"h": Fraction(101, 17), "nu": Fraction(1, 9), "zeta": Fraction(2, 7), "M": Fraction(-5, 3), "j": Fraction(4)},
]


small = st.integers(-4, 4)


@st.composite
def polys(draw, variables=("h",), max_terms=3, max_exp=2):
    p = RING.zero
    gens = dict(zip(VARIABLES, RING.gens))
    for _ in range(draw(st.integers(0, max_terms))):
        mono = RING(draw(small))
        for v in variables:
            mono *= gens[v] ** draw(st.integers(0, max_exp))
        p += mono
    return p


@st.composite
def ratfuncs(draw, variables=("h",), nonzero=False):
    num = draw(polys(variables))
    den = draw(polys(variables).filter(bool))
    f = RatFunc(num, den)
    if nonzero and f.is_zero():
        f = RatFunc.const(draw(st.sampled_from([1, -1, 2, Fraction(1, 3)])))
    return f


@st.composite
def elements(draw, max_len=3, max_terms=3, ordered=False):
    d = build()
    gens = d.generators
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        w = draw(st.lists(st.sampled_from(gens), max_size=max_len))
        if ordered:
            w.sort(key=d.presentation.index.__getitem__)
        terms.append((tuple(w), draw(ratfuncs(nonzero=True))))
    return NCElement(terms)


@pytest.fixture(scope="session")
def dr():
    return build()


@pytest.fixture(scope="session")
def pres(dr):
    return dr.presentation


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.VERDICTS):
        terminalreporter.write_line(mod.VERDICTS[n])
