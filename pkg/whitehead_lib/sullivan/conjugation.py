"""Conjugating a differential by an automorphism family.

The quadratic obstruction asks for parameters making every non-quadratic
coefficient of f d f^-1 vanish. Numerators are cleared of the declared
nonvanishing factors, nonvanishing is imposed with one extra variable
(t * Π nonvanishing - 1) and the system is decided by a Groebner basis; a
rational witness is searched with ``sympy.solve`` otherwise.
"""

import logging
from typing import Iterable

import sympy

from ..enums import SolverVerdict
from ..graded import GradedPolynomial
from .AutomorphismFamily import AutomorphismFamily
from .SullivanAlgebraPresentation import SullivanAlgebraPresentation

_LOGGER = logging.getLogger(__name__)


def conjugated_differential(
    algebra: SullivanAlgebraPresentation, family: AutomorphismFamily
) -> dict[str, GradedPolynomial]:
    """f ∘ d ∘ f^-1 on each generator."""
    inverse = family.inverse_images()
    result = {}
    for name in algebra.order:
        result[name] = family.apply(algebra.apply(inverse[name]))
        _LOGGER.debug("d'(%s) = %s", name, result[name].render())
    return result


class QuadraticObstructionReport:
    def __init__(
        self,
        verdict: SolverVerdict,
        equations: list[sympy.Expr],
        nonvanishing: Iterable[sympy.Expr],
        witness: dict[sympy.Symbol, sympy.Rational] | None = None,
    ):
        self.verdict = verdict
        self.equations = equations
        self.nonvanishing = list(nonvanishing)
        self.witness = witness

    @property
    def quadratic_in_family(self) -> bool | None:
        """Whether some member of the family makes the differential quadratic."""
        if self.verdict == SolverVerdict.UNDECIDED:
            return None
        return self.verdict == SolverVerdict.SOLVABLE


def strip_nonvanishing(expr: sympy.Expr, nonvanishing: set) -> sympy.Expr:
    numerator, _ = sympy.fraction(sympy.together(expr))
    _, factors = sympy.factor_list(numerator)
    kept = sympy.Integer(1)
    for base, power in factors:
        if base not in nonvanishing:
            kept *= base**power
    return sympy.expand(kept)


def obstruction_equations(
    differential: dict[str, GradedPolynomial], nonvanishing: set
) -> list[sympy.Expr]:
    equations = []
    for name, value in differential.items():
        for word, coef in value.terms.items():
            if len(word) == 2:
                continue
            equation = strip_nonvanishing(coef, nonvanishing)
            if equation.is_Rational:
                equations.append(sympy.Integer(1))
            elif equation not in equations:
                equations.append(equation)
    return equations


def _rational_witness(equations, symbols, nonvanishing) -> dict | None:
    try:
        solutions = sympy.solve(equations, symbols, dict=True)
    except NotImplementedError:
        return None
    for solution in solutions:
        free = set()
        for value in solution.values():
            free |= value.free_symbols
        free |= set(symbols) - set(solution)
        point = {symbol: sympy.Integer(1) for symbol in free}
        candidate = {
            symbol: sympy.sympify(solution.get(symbol, symbol)).subs(point)
            for symbol in symbols
        }
        if not all(value.is_Rational for value in candidate.values()):
            continue
        if any(sympy.sympify(expr).subs(candidate) == 0 for expr in nonvanishing):
            continue
        if all(sympy.expand(eq.subs(candidate)) == 0 for eq in equations):
            return candidate
    return None


def quadratic_obstruction(
    differential: dict[str, GradedPolynomial], family: AutomorphismFamily
) -> QuadraticObstructionReport:
    """Decide whether the family kills every non-quadratic term of the differential."""
    nonvanishing = family.nonvanishing
    equations = obstruction_equations(differential, nonvanishing)
    if not equations:
        return QuadraticObstructionReport(SolverVerdict.SOLVABLE, [], nonvanishing, {})
    symbols = set()
    for expr in [*equations, *nonvanishing]:
        symbols |= expr.free_symbols
    symbols = sorted(symbols, key=str)
    if any(eq.is_Rational for eq in equations):
        return QuadraticObstructionReport(SolverVerdict.NO_SOLUTION, equations, nonvanishing)
    helper = sympy.Dummy("t")
    system = list(equations)
    if nonvanishing:
        system.append(helper * sympy.Mul(*nonvanishing) - 1)
    basis = sympy.groebner(system, *symbols, helper, order="lex", domain=sympy.QQ)
    if list(basis.exprs) == [1]:
        _LOGGER.debug("Obstruction system %s is inconsistent", equations)
        return QuadraticObstructionReport(SolverVerdict.NO_SOLUTION, equations, nonvanishing)
    witness = _rational_witness(equations, symbols, nonvanishing)
    if witness is not None:
        return QuadraticObstructionReport(SolverVerdict.SOLVABLE, equations, nonvanishing, witness)
    _LOGGER.warning("Could not decide the obstruction system %s", equations)
    return QuadraticObstructionReport(SolverVerdict.UNDECIDED, equations, nonvanishing)
