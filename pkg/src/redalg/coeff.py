"""Exact rational functions over QQ in the commuting variables h, nu, zeta, M, j.

Polynomials are sparse sympy ring elements (exponent tuple -> rational) in a
fixed ring with graded-lexicographic order.  :class:`RatFunc` keeps a reduced
fraction whose denominator is monic under that order, so equality is a plain
structural comparison.

Only ``h`` carries weight; :func:`shift` moves ``h`` and nothing else.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

VARIABLES = ("h", "nu", "zeta", "M", "j")

RING, H, NU, ZETA, MM, J = ring(",".join(VARIABLES), QQ, grlex)

Poly = PolyElement
Scalar = Union[int, Fraction]
Degree = Union[int, float]  # int, or -math.inf for the zero function

_GEN_BY_NAME = dict(zip(VARIABLES, RING.gens))


class SingularSubstitution(ZeroDivisionError):
    """The denominator vanishes identically after substitution."""


def _qq(c: Scalar) -> object:
    if isinstance(c, Fraction):
        return QQ(c.numerator, c.denominator)
    return QQ(c)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class RatFunc:
    """Reduced fraction num/den of polynomials; den is monic under grlex."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, *, _reduced: bool = False):
        if den is None:
            den = RING.one
        if not den:
            raise ZeroDivisionError("division by zero")
        if not _reduced:
            if not num:
                num, den = RING.zero, RING.one
            else:
                num, den = num.cancel(den)
                lc = den.LC
                if lc != 1:
                    num, den = num.quo_ground(lc), den.quo_ground(lc)
        self.num = num
        self.den = den
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls(RING(_qq(c)), _reduced=True)

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        try:
            return cls(_GEN_BY_NAME[name], _reduced=True)
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, PolyElement):
            return cls(x, _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == RING.one and self.den == RING.one

    def is_polynomial(self) -> bool:
        return self.den == RING.one

    def is_constant(self) -> bool:
        return self.den == RING.one and self.num.is_ground

    def variables(self) -> set[str]:
        used = set()
        for p in (self.num, self.den):
            for monom in p.itermonoms():
                used.update(v for v, e in zip(VARIABLES, monom) if e)
        return used

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return to_fraction(self.num.LC) if self.num else Fraction(0)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        if other.is_constant():
            return RatFunc(self.num.mul_ground(other.num.LC), self.den, _reduced=True)
        if self.is_constant():
            return RatFunc(other.num.mul_ground(self.num.LC), other.den, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({render(self)!r})"

    def __str__(self):
        return render(self)


def _maybe(x):
    try:
        return RatFunc.coerce(x)
    except TypeError:
        return NotImplemented


ZERO = RatFunc(RING.zero, _reduced=True)
ONE = RatFunc(RING.one, _reduced=True)


# functional surface ------------------------------------------------------


def add(f: RatFunc, g: RatFunc) -> RatFunc:
    return f + g


def mul(f: RatFunc, g: RatFunc) -> RatFunc:
    return f * g


def inv(f: RatFunc) -> RatFunc:
    return f.inv()


def shift(f: RatFunc, c: Scalar) -> RatFunc:
    """Replace h by h + c."""
    if c == 0:
        return f
    image = H + _qq(c)
    num = f.num.compose(H, image)
    den = f.den.compose(H, image)
    # a translation keeps gcd = 1, but grlex leading terms can move
    lc = den.LC
    if lc != 1:
        num, den = num.quo_ground(lc), den.quo_ground(lc)
    return RatFunc(num, den, _reduced=True)


def _total_degree(p: Poly) -> int:
    return max(sum(m) for m in p.itermonoms())


def degree(f: RatFunc) -> Degree:
    """Total degree of the numerator minus that of the denominator."""
    if f.is_zero():
        return -math.inf
    return _total_degree(f.num) - _total_degree(f.den)


def symbol(f: RatFunc) -> Fraction:
    """Ratio of the grlex leading coefficients of numerator and denominator."""
    if f.is_zero():
        raise ValueError("symbol of zero is undefined")
    return to_fraction(f.num.LC) / to_fraction(f.den.LC)


def _eval_poly(p: Poly, values: list[RatFunc | None]) -> RatFunc:
    acc = ZERO
    for monom, c in p.iterterms():
        term = RatFunc(RING(c), _reduced=True)
        for gen, e, val in zip(RING.gens, monom, values):
            if e:
                term = term * ((RatFunc(gen, _reduced=True) if val is None else val) ** e)
        acc = acc + term
    return acc


def substitute(f: RatFunc, assignments: Mapping[str, RatFunc | Scalar]) -> RatFunc:
    """Simultaneously replace variables by rational functions."""
    if not assignments:
        return f
    images = {}
    for name, val in assignments.items():
        if name not in _GEN_BY_NAME:
            raise ValueError(f"unknown variable {name!r}")
        images[name] = RatFunc.coerce(val)
    if all(v.is_polynomial() for v in images.values()):
        pairs = [(_GEN_BY_NAME[n], v.num) for n, v in images.items()]
        num = f.num.compose(pairs)
        den = f.den.compose(pairs)
        if not den:
            raise SingularSubstitution("singular substitution")
        return RatFunc(num, den)
    values = [images.get(n) for n in VARIABLES]
    den = _eval_poly(f.den, values)
    if den.is_zero():
        raise SingularSubstitution("singular substitution")
    return _eval_poly(f.num, values) / den


# rendering ----------------------------------------------------------------


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: Poly) -> str:
    """Deterministic rendering, grlex-descending, e.g. ``h^2 + 3*h - 1/4*nu``."""
    if not p:
        return "0"
    parts = []
    for monom, c in p.terms():  # terms() is sorted by the ring order, leading first
        c = to_fraction(c)
        factors = []
        for name, e in zip(VARIABLES, monom):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _render_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_coeff(mag)] + factors)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def render(f: RatFunc) -> str:
    if f.is_polynomial():
        return render_poly(f.num)
    num = render_poly(f.num)
    if len(f.num) > 1:
        num = f"({num})"
    return f"{num}/({render_poly(f.den)})"
