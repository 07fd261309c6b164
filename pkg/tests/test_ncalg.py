from hypothesis import given, settings, strategies as st

from redalg.coeff import RatFunc
from redalg.drsl2 import GENERATORS, T, ZM, ZP
from redalg.ncalg import MIXED, NCElement, concat, push_left, weight_of, word_weight
from redalg.weylmod import ModuleVector, act

from conftest import elements, ratfuncs

h = RatFunc.var("h")
v = ModuleVector.basis()


def right_times(w, f):
    """Module action of the word w with f written on its right: f first, then w."""
    return act(NCElement.word(*w), act(NCElement.scalar(f), v))


def test_push_left_examples():
    f = (h + 4) / (h + 2)
    w = (T, ZP)
    assert push_left(f, w) == (h + 2) / h
    assert act(NCElement({w: push_left(f, w)}), v) == right_times(w, f)

    assert push_left(f, ()) == f

    assert push_left(h, (ZM,)) == h + 2
    assert act(NCElement({(ZM,): h + 2}), v) == right_times((ZM,), h)


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), st.lists(st.sampled_from(GENERATORS), max_size=4))
def test_push_left_matches_module_action(f, w):
    w = tuple(w)
    assert act(NCElement({w: push_left(f, w)}), v) == right_times(w, f)


def test_concat_examples():
    assert concat(NCElement.word(ZP), NCElement.word(T)) == NCElement({(ZP, T): 1})
    f, g = (h + 1) / h, h - 3
    assert concat(NCElement.scalar(f), NCElement.scalar(g)) == NCElement.scalar(f * g)
    c = (h + 4) / (h + 2)
    assert concat(NCElement.word(T), NCElement.word(ZP, coeff=c)) == NCElement({(T, ZP): c})


def test_weight_of_examples():
    assert weight_of(NCElement.word(ZP)) == 2
    assert weight_of(NCElement.word(T)) == 0
    assert weight_of(NCElement.word(ZM)) == -2
    assert weight_of(NCElement.word(ZP) + NCElement.word(T)) == MIXED


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements())
def test_concat_associative_and_unital(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    one = NCElement.scalar(1)
    assert concat(one, a) == a == concat(a, one)


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), ratfuncs(), st.lists(st.sampled_from(GENERATORS), max_size=3),
       st.lists(st.sampled_from(GENERATORS), max_size=3))
def test_push_left_respects_products(f, g, u, w):
    u, w = tuple(u), tuple(w)
    assert push_left(f * g, w) == push_left(f, w) * push_left(g, w)
    assert push_left(f, u + w) == push_left(push_left(f, w), u)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(GENERATORS), max_size=3),
       st.lists(st.sampled_from(GENERATORS), max_size=3), ratfuncs(nonzero=True))
def test_weight_additive(u, w, f):
    a = NCElement.word(*u, coeff=f)
    b = NCElement.word(*w)
    assert weight_of(concat(a, b)) == word_weight(tuple(u)) + word_weight(tuple(w))


def test_zero_coefficients_dropped():
    a = NCElement.word(ZP) - NCElement.word(ZP)
    assert a.is_zero() and a == NCElement()
