import random

import pytest
from hypothesis import given, settings, strategies as st

from redalg.coeff import RatFunc
from redalg.drsl2 import T, ZM, ZP, build, random_element
from redalg.ncalg import NCElement, concat, weight_components
from redalg.ore import Denominator, homogeneity_identity, ore_right, ore_vanishing, witness_defect
from redalg.rewrite import normal_form

from conftest import elements

h = RatFunc.var("h")
P = build().presentation


def expand(a, s, w):
    """a s~ and s a~ computed independently of ore_right's bookkeeping."""
    left = normal_form(P, concat(a, NCElement.scalar(w.s_tilde)))
    right = normal_form(P, concat(NCElement.scalar(h + s.k), w.a_tilde))
    return left, right


@pytest.mark.parametrize("k", [-3, 0, 4])
def test_ore_right_single_weight(k):
    s = Denominator(k)
    a = NCElement.word(ZP)
    w = ore_right(a, s)
    assert w.s_tilde == h + k + 2
    assert w.a_tilde == a
    assert concat(a, NCElement.scalar(h + k + 2)) == concat(NCElement.scalar(h + k), a)


def test_ore_right_commutative_case():
    f = (h + 1) / (h - 3)
    w = ore_right(NCElement.scalar(f), Denominator(5))
    assert w.s_tilde == h + 5 and w.a_tilde == NCElement.scalar(f)


def test_ore_right_two_weights():
    s = Denominator(1)
    a = NCElement.word(ZP) + NCElement.word(ZM)
    w = ore_right(a, s)
    assert w.s_tilde == (h + 3) * (h - 1)
    left, right = expand(a, s, w)
    assert left == right
    assert witness_defect(a, s, w, P).is_zero()


@settings(max_examples=40, deadline=None)
@given(elements(), st.integers(-5, 5))
def test_witness_verifies(a, k):
    s = Denominator(k)
    w = ore_right(a, s)
    left, right = expand(a, s, w)
    assert left == right
    assert len(w.offsets) == len(weight_components(a))
    prod = RatFunc.const(1)
    for o in w.offsets:
        prod = prod * (h + o)
    assert prod == w.s_tilde


@settings(max_examples=30, deadline=None)
@given(elements(), st.integers(-5, 5))
def test_homogeneity_identity(a, k):
    for part in weight_components(a).values():
        assert homogeneity_identity(part, Denominator(k))


def test_homogeneity_rejects_mixed():
    with pytest.raises(ValueError):
        homogeneity_identity(NCElement.word(ZP) + NCElement.word(T), Denominator(0))


def test_ore_vanishing():
    w = ore_vanishing(NCElement(), Denominator(2))
    assert w is not None and w.s_tilde == RatFunc.const(1)
    assert concat(NCElement(), NCElement.scalar(w.s_tilde)).is_zero()
    assert ore_vanishing(NCElement.word(ZP), Denominator(0)) is None
    rng = random.Random(11)
    for _ in range(20):
        a = random_element(rng, 3)
        assert ore_vanishing(a, Denominator(rng.randint(-5, 5))) is None
