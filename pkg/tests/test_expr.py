import pytest
from hypothesis import given, settings

from redalg.coeff import RatFunc
from redalg.drsl2 import GENERATORS, T, ZM, ZP, build
from redalg.expr import ParseError, parse, render_element, to_json
from redalg.ncalg import NCElement

from conftest import elements

h = RatFunc.var("h")

# the DR(sl(2)) formulas as one would type them, coefficients written on the right
FORMULAS = [
    "z+ * t",
    "t * z+ * (h+4)/(h+2)",
    "z+ * z-",
    "z- * z+ * (h*(h+3))/((h+1)*(h+2)) - t^2 * 1/h + h",
    "t * z-",
    "z- * t * (h+2)/h",
    "h*z+ - z+*h",
    "h*t - t*h",
    "h*z- - z-*h",
    "(h+2)*t",
    "z- * z+ * (h+3)/(h+2) + t^2/4 + h*(h+4)/4",
    "z- * z+ * (h+3)/(h+2) + t^2*(1/4) + (h*(h+4))/4",
    "z- * h / 2",
    "nu * zeta * z+ - 3/7 + M",
]


def p(src):
    return parse(src, GENERATORS)


def test_parse_examples():
    d = build()
    assert p("z+ * t") == NCElement.word(ZP, T)
    assert p("(h+2)*t") == d.c1
    assert p("z- * z+ * (h+3)/(h+2) + t^2/4 + h*(h+4)/4") == d.c2


def test_parse_pushes_right_coefficients_left():
    assert p("t * z+ * (h+4)/(h+2)") == NCElement({(T, ZP): (h + 2) / h})
    assert p("z- * h") == NCElement({(ZM,): h + 2})
    assert p("h * z- - z- * h") == NCElement({(ZM,): RatFunc.const(-2)})


def test_parse_relations_match_rules(pres):
    assert p("t * z+ * (h+4)/(h+2)") == pres.rules[(ZP, T)].rhs
    assert p("z- * z+ * (h*(h+3))/((h+1)*(h+2)) - t^2 * 1/h + h") == pres.rules[(ZP, ZM)].rhs
    assert p("z- * t * (h+2)/h") == pres.rules[(T, ZM)].rhs


def test_whitespace_insignificant():
    assert p("z-*z+*(h+3)/(h+2)") == p("  z- *  z+ * ( h + 3 ) / ( h + 2 ) ")


@pytest.mark.parametrize(
    "src, fragment, pos",
    [
        ("z+ * * t", None, 5),
        ("z+ * q", "unknown symbol", 5),
        ("1.5 * t", "malformed rational", 0),
        ("t / z+", "divisor must be commutative", 2),
        ("(h + 1", None, None),
        ("h / (h - h)", "division by zero", None),
    ],
)
def test_parse_errors(src, fragment, pos):
    with pytest.raises(ParseError, match=fragment) as info:
        p(src)
    if pos is not None:
        assert info.value.pos == pos


@pytest.mark.parametrize("src", FORMULAS)
def test_round_trip_corpus(src):
    e = p(src)
    r = render_element(e, GENERATORS)
    assert p(r) == e
    assert render_element(p(r), GENERATORS) == r


@settings(max_examples=60, deadline=None)
@given(elements(max_len=3, ordered=False))
def test_parse_render_identity(a):
    assert p(render_element(a, GENERATORS)) == a


def test_render_examples():
    assert render_element(NCElement(), GENERATORS) == "0"
    assert render_element(NCElement.word(ZP, ZP, T), GENERATORS) == "z+^2 * t"
    assert render_element(p("(h+2)*t"), GENERATORS) == "(h + 2) * t"


def test_to_json_schema():
    doc = to_json(p("z- * z+ * (h+3)/(h+2) + t^2/4"), GENERATORS)
    assert list(doc) == ["terms"]
    assert doc["terms"] == [
        {"coeff": {"num": "h + 3", "den": "h + 2"}, "word": ["z-", "z+"]},
        {"coeff": {"num": "1/4", "den": "1"}, "word": ["t", "t"]},
    ]
