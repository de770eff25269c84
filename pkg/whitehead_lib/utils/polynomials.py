"""Monomials in named parameters, kept as sympy power products."""

from fractions import Fraction
from typing import Iterable, Mapping

import sympy

from .rationals import sympy_to_fraction, to_sympy

Monomial = sympy.Expr

ONE: Monomial = sympy.S.One


def symbol(name: str) -> sympy.Symbol:
    return sympy.Symbol(name)


def monomial(*names: str) -> Monomial:
    return sympy.Mul(*(symbol(name) for name in names))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def monomial_degree(m: Monomial) -> int:
    if not m.free_symbols:
        return 0
    return sympy.Poly(m, *m.free_symbols).total_degree()


def monomial_variables(m: Monomial) -> set[str]:
    return {s.name for s in m.free_symbols}


def evaluate_monomial(m: Monomial, values: Mapping[str, Fraction]) -> Fraction:
    substitution = {s: to_sympy(values.get(s.name, 0)) for s in m.free_symbols}
    return sympy_to_fraction(m.subs(substitution))


def polynomial_to_sympy(terms: Iterable[tuple[Monomial, object]]) -> sympy.Expr:
    return sympy.expand(sympy.Add(*(to_sympy(coef) * m for m, coef in terms)))
