"""Text front-end: parse expressions into NCElements and render them back.

Grammar (whitespace insignificant)::

    expr   := [+|-] term ((+|-) term)*
    term   := unary ((*|/) unary)*
    unary  := - unary | power
    power  := atom [^ uint]
    atom   := generator | h | nu | zeta | M | uint | ( expr )

Division needs a commutative (scalar) right operand.  ``h`` and the other
variables are coefficients; writing them to the right of a generator is legal
and gets pushed to the left, so right-written formulas can be typed verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coeff import RatFunc, render, render_poly
from .ncalg import Generator, NCElement, concat

COEFF_VARIABLES = ("h", "nu", "zeta", "M")

_NUMBER = re.compile(r"\d+(?:\.\d*)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str):
        super().__init__(f"{message} at position {pos}: {src!r}")
        self.pos = pos
        self.src = src


@dataclass(frozen=True)
class Token:
    kind: str  # "gen", "var", "num", "op", "end"
    text: str
    pos: int


def tokenize(src: str, generators: Iterable[Generator]) -> list[Token]:
    names = sorted((g.name for g in generators), key=len, reverse=True)
    toks = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        matched = None
        for name in names:
            if src.startswith(name, i):
                end = i + len(name)
                if name[-1].isalnum() and end < n and (src[end].isalnum() or src[end] == "_"):
                    continue
                matched = name
                break
        if matched:
            toks.append(Token("gen", matched, i))
            i += len(matched)
            continue
        if ch.isdigit():
            m = _NUMBER.match(src, i)
            if "." in m.group():
                raise ParseError(f"malformed rational {m.group()!r}", i, src)
            toks.append(Token("num", m.group(), i))
            i = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _IDENT.match(src, i)
            word = m.group()
            if word not in COEFF_VARIABLES:
                raise ParseError(f"unknown symbol {word!r}", i, src)
            toks.append(Token("var", word, i))
            i = m.end()
            continue
        if ch in "+-*/^()":
            toks.append(Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i, src)
    toks.append(Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, src: str, generators: Sequence[Generator]):
        self.src = src
        self.by_name = {g.name: g for g in generators}
        self.toks = tokenize(src, generators)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str):
        raise ParseError(msg, self.tok.pos, self.src)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            self.error(f"expected {op!r}")

    def parse(self) -> NCElement:
        if self.tok.kind == "end":
            self.error("empty expression")
        out = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return out

    def expr(self) -> NCElement:
        if self.accept("-"):
            acc = -self.term()
        else:
            self.accept("+")
            acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> NCElement:
        acc = self.unary()
        while True:
            if self.accept("*"):
                acc = concat(acc, self.unary())
            elif self.tok.kind == "op" and self.tok.text == "/":
                pos = self.tok.pos
                self.i += 1
                den = self.unary()
                if any(den.terms.keys() - {()}):
                    raise ParseError("divisor must be commutative", pos, self.src)
                if den.is_zero():
                    raise ParseError("division by zero", pos, self.src)
                acc = concat(acc, NCElement.scalar(den.terms[()].inv()))
            else:
                return acc

    def unary(self) -> NCElement:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> NCElement:
        base = self.atom()
        if self.accept("^"):
            if self.tok.kind != "num":
                self.error("expected unsigned integer exponent")
            e = int(self.tok.text)
            self.i += 1
            out = NCElement.scalar(1)
            for _ in range(e):
                out = concat(out, base)
            return out
        return base

    def atom(self) -> NCElement:
        tok = self.tok
        if tok.kind == "gen":
            self.i += 1
            return NCElement.word(self.by_name[tok.text])
        if tok.kind == "var":
            self.i += 1
            return NCElement.scalar(RatFunc.var(tok.text))
        if tok.kind == "num":
            self.i += 1
            return NCElement.scalar(int(tok.text))
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        self.error("expected an operand")


def parse(src: str, generators: Sequence[Generator]) -> NCElement:
    return _Parser(src, generators).parse()


# rendering ----------------------------------------------------------------


def word_key(order: Sequence[Generator] | None):
    if order is None:
        return lambda w: (len(w), tuple((g.weight, g.name) for g in w))
    index = {g: i for i, g in enumerate(order)}
    return lambda w: (len(w), tuple(index[g] for g in w))


def render_word(w) -> str:
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        parts.append(w[i].name if run == 1 else f"{w[i].name}^{run}")
        i = j
    return " * ".join(parts)


def _abs_coeff(c: RatFunc) -> tuple[bool, RatFunc]:
    negative = c.num.LC < 0
    return negative, (-c if negative else c)


def _render_term_body(c: RatFunc, w) -> str:
    if not w:
        if c.is_polynomial() and len(c.num) > 1:
            return f"({render_poly(c.num)})"
        return render(c)
    ws = render_word(w)
    if c.is_one():
        return ws
    if c.is_polynomial():
        cs = render_poly(c.num)
        if len(c.num) > 1:
            cs = f"({cs})"
    else:
        cs = render(c)
    return f"{cs} * {ws}"


def render_element(a: NCElement, order: Sequence[Generator] | None = None) -> str:
    """Canonical text: terms by (length, generator order), coefficients on the left."""
    if a.is_zero():
        return "0"
    out = []
    for w in sorted(a.terms, key=word_key(order)):
        negative, c = _abs_coeff(a.terms[w])
        body = _render_term_body(c, w)
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"{'-' if negative else '+'} {body}")
    return " ".join(out)


def to_json(a: NCElement, order: Sequence[Generator] | None = None) -> dict:
    return {
        "terms": [
            {
                "coeff": {"num": render_poly(a.terms[w].num), "den": render_poly(a.terms[w].den)},
                "word": [g.name for g in w],
            }
            for w in sorted(a.terms, key=word_key(order))
        ]
    }


