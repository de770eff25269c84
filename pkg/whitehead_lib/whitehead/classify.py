"""Cardinality and zero membership of a parameterized bracket set."""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterator

import sympy

from ..const import DEFAULT_SEARCH_BOUND, DEFAULT_SEARCH_BUDGET
from ..enums import Cardinality, ZeroMembership
from ..utils.rationals import sympy_to_fraction
from .BracketSet import BracketSet

_LOGGER = logging.getLogger(__name__)


class ClassifyConfig:
    def __init__(
        self,
        search_bound: int = DEFAULT_SEARCH_BOUND,
        search_budget: int = DEFAULT_SEARCH_BUDGET,
    ):
        self.search_bound = search_bound
        self.search_budget = search_budget


class Classification:
    def __init__(
        self,
        cardinality: Cardinality,
        zero_membership: ZeroMembership,
        value: dict[str, Fraction] | None = None,
        witnesses: list[dict[str, Fraction]] | None = None,
        zero_witness: dict[str, Fraction] | None = None,
    ):
        self.cardinality = cardinality
        self.zero_membership = zero_membership
        self.value = value
        self.witnesses = witnesses or []
        self.zero_witness = zero_witness

    def __repr__(self):
        return (
            f"Classification({self.cardinality.value}, zero={self.zero_membership.value})"
        )


def _search_points(count: int, config: ClassifyConfig) -> Iterator[tuple[int, ...]]:
    """Integer points by growing max-norm, at most ``search_budget`` of them."""
    if count == 0:
        yield ()
        return
    produced = 0
    for radius in range(0, config.search_bound + 1):
        for point in product(range(-radius, radius + 1), repeat=count):
            if max(abs(c) for c in point) != radius:
                continue
            yield point
            produced += 1
            if produced >= config.search_budget:
                return


def _all_vanish(expressions: list[sympy.Expr], values: dict) -> bool:
    return all(sympy.expand(expr.subs(values)) == 0 for expr in expressions)


def _is_affine(expressions: list[sympy.Expr], symbols: list[sympy.Symbol]) -> bool:
    for expr in expressions:
        if not symbols or expr.is_number:
            continue
        if sympy.Poly(expr, *symbols).total_degree() > 1:
            return False
    return True


def _witness(bracket: BracketSet, values: dict) -> dict[str, Fraction]:
    return bracket.full_assignment({s.name: sympy_to_fraction(v) for s, v in values.items()})


def _zero_membership(
    bracket: BracketSet, config: ClassifyConfig
) -> tuple[ZeroMembership, dict | None]:
    symbols = bracket.free_parameters
    coordinates = [expr for expr in bracket.coordinates.values() if expr != 0]
    equations = coordinates + bracket.constraints
    zero = {symbol: sympy.Integer(0) for symbol in symbols}
    if _all_vanish(equations, zero):
        return ZeroMembership.YES, _witness(bracket, zero)
    if not symbols:
        return ZeroMembership.NO, None
    if _is_affine(equations, symbols):
        solutions = sympy.linsolve(equations, symbols)
        if solutions == sympy.EmptySet:
            return ZeroMembership.NO, None
        solution = next(iter(solutions))
        leftover = {s: sympy.Integer(0) for s in symbols}
        values = {
            symbol: sympy.sympify(expr).subs(leftover)
            for symbol, expr in zip(symbols, solution)
        }
        return ZeroMembership.YES, _witness(bracket, values)
    try:
        for solution in sympy.solve(equations, symbols, dict=True):
            values = {s: sympy.sympify(solution.get(s, s)).subs(zero) for s in symbols}
            if all(value.is_Rational for value in values.values()):
                return ZeroMembership.YES, _witness(bracket, values)
    except NotImplementedError:
        _LOGGER.debug("Symbolic solve gave up, falling back to a bounded search")
    for point in _search_points(len(symbols), config):
        values = {s: sympy.Integer(c) for s, c in zip(symbols, point)}
        if _all_vanish(equations, values):
            return ZeroMembership.YES, _witness(bracket, values)
    _LOGGER.warning("Zero membership undecided after a bounded search")
    return ZeroMembership.UNKNOWN, None


def _distinct_values(
    bracket: BracketSet, config: ClassifyConfig
) -> list[dict[str, Fraction]] | None:
    """Three parameter points with pairwise distinct class values.

    A non-constant coordinate is restricted to a line along one of its
    variables where the leading coefficient survives; the restriction is a
    non-constant univariate polynomial and takes three values within
    2*degree + 1 consecutive integers.
    """
    symbols = bracket.free_parameters
    for expr in bracket.coordinates.values():
        if expr.is_number:
            continue
        variable = sorted(expr.free_symbols, key=lambda s: s.name)[0]
        poly = sympy.Poly(expr, variable)
        leading = poly.LC()
        others = [s for s in symbols if s != variable]
        for point in _search_points(len(others), config):
            base = {s: sympy.Integer(c) for s, c in zip(others, point)}
            if sympy.expand(sympy.sympify(leading).subs(base)) == 0:
                continue
            found: dict = {}
            for t in range(0, 2 * poly.degree() + 1):
                values = dict(base)
                values[variable] = sympy.Integer(t)
                found.setdefault(expr.subs(values), values)
                if len(found) == 3:
                    return [_witness(bracket, v) for v in found.values()]
        break
    return None


def classify(bracket: BracketSet, config: ClassifyConfig = ClassifyConfig()) -> Classification:
    if bracket.is_empty:
        return Classification(Cardinality.EMPTY, ZeroMembership.NO)
    zero, zero_witness = _zero_membership(bracket, config)
    if bracket.is_constant():
        value = {
            name: sympy_to_fraction(expr) for name, expr in bracket.coordinates.items()
        }
        if bracket.constraints and zero_witness is None:
            # the remaining constraints might have no rational solution at all
            _LOGGER.warning("Constant bracket set whose constraints were not solved")
            return Classification(Cardinality.UNDECIDED, zero, value=value)
        return Classification(Cardinality.SINGLETON, zero, value=value, zero_witness=zero_witness)
    if bracket.constraints:
        _LOGGER.warning(
            "Non-constant bracket set restricted by %d unsolved constraints",
            len(bracket.constraints),
        )
        return Classification(Cardinality.UNDECIDED, zero, zero_witness=zero_witness)
    witnesses = _distinct_values(bracket, config)
    if witnesses is None:
        _LOGGER.warning("No three distinct values found within the search budget")
        return Classification(Cardinality.UNDECIDED, zero, zero_witness=zero_witness)
    return Classification(
        Cardinality.INFINITE, zero, witnesses=witnesses, zero_witness=zero_witness
    )
