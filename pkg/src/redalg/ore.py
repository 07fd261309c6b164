"""Ore-condition witnesses for the denominators h + k.

For a weight-homogeneous ``a`` of weight ``mu`` one has
``a (h + k + mu) = (h + k) a``, so multiplying ``a`` on the right by the product of
``h + k + mu`` over the weights present makes it left-divisible by ``h + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .coeff import ONE, RatFunc
from .ncalg import NC_ZERO, NCElement, concat, weight_components
from .rewrite import Presentation, normal_form

h = RatFunc.var("h")


class Denominator(NamedTuple):
    k: int

    def coeff(self) -> RatFunc:
        return h + self.k


@dataclass(frozen=True)
class OreWitness:
    s_tilde: RatFunc
    a_tilde: NCElement
    offsets: tuple[int, ...]  # s_tilde = prod(h + o for o in offsets)


def _product(offsets) -> RatFunc:
    out = ONE
    for o in offsets:
        out = out * (h + o)
    return out


def ore_right(a: NCElement, s: Denominator) -> OreWitness:
    """Witness (s~, a~) with a s~ = s a~."""
    parts = weight_components(a)
    offsets = tuple(s.k + mu for mu in parts)
    a_tilde = NC_ZERO
    for mu, part in parts.items():
        rest = _product(s.k + nu for nu in parts if nu != mu)
        a_tilde = a_tilde + concat(part, NCElement.scalar(rest))
    return OreWitness(_product(offsets), a_tilde, offsets)


def witness_defect(
    a: NCElement, s: Denominator, w: OreWitness, p: Presentation | None = None
) -> NCElement:
    """normal_form(a s~ - s a~); zero for a valid witness."""
    diff = concat(a, NCElement.scalar(w.s_tilde)) - concat(NCElement.scalar(s.coeff()), w.a_tilde)
    return normal_form(p, diff) if p is not None else diff


def ore_vanishing(a: NCElement, s: Denominator) -> OreWitness | None:
    """If s a = 0, a witness s~ with a s~ = 0; None when s a != 0 (no torsion here)."""
    if not concat(NCElement.scalar(s.coeff()), a).is_zero():
        return None
    w = ore_right(a, s)
    return OreWitness(w.s_tilde, NC_ZERO, w.offsets)


def homogeneity_identity(a: NCElement, s: Denominator) -> bool:
    """a (h+k+mu) == (h+k) a for a homogeneous a of weight mu."""
    parts = weight_components(a)
    if len(parts) > 1:
        raise ValueError("element is not weight homogeneous")
    mu = next(iter(parts), 0)
    lhs = concat(a, NCElement.scalar(h + s.k + mu))
    return lhs == concat(NCElement.scalar(s.coeff()), a)
