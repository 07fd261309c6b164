"""Exact rewriting engine for DR(sl(2)) and algebras presented by ordering relations."""

from .coeff import RatFunc, degree, shift, substitute, symbol
from .ncalg import Generator, NCElement, concat, push_left, weight_of
from .rewrite import Presentation, apply_once, check_confluence, enumerate_basis, normal_form

__version__ = "0.1.0"
