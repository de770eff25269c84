import logging
from typing import Iterable

import sympy

_LOGGER = logging.getLogger(__name__)


class ConstraintSystem:
    """Polynomial equations (expr = 0) in extension parameters.

    Constraints affine in some parameter with a constant coefficient are
    eliminated by substitution, repeatedly; whatever remains is kept as
    residual equations.
    """

    def __init__(self, constraints: Iterable[sympy.Expr] = ()):
        self.constraints: list[sympy.Expr] = []
        for constraint in constraints:
            self.add(constraint)

    def add(self, constraint) -> None:
        constraint = sympy.expand(sympy.sympify(constraint))
        if constraint != 0:
            self.constraints.append(constraint)

    def extend(self, constraints: Iterable[sympy.Expr]) -> None:
        for constraint in constraints:
            self.add(constraint)

    def __len__(self):
        return len(self.constraints)

    def eliminate(self) -> "Elimination":
        substitutions: dict[sympy.Symbol, sympy.Expr] = {}
        pending = list(self.constraints)
        changed = True
        while changed:
            changed = False
            remaining = []
            for constraint in pending:
                constraint = sympy.expand(constraint.subs(substitutions))
                if constraint == 0:
                    continue
                if constraint.is_number:
                    _LOGGER.debug("Inconsistent constraint %s", constraint)
                    return Elimination(substitutions, [], consistent=False)
                solved = _solve_affine(constraint)
                if solved is None:
                    remaining.append(constraint)
                    continue
                variable, value = solved
                substitutions = {
                    key: sympy.expand(expr.subs(variable, value))
                    for key, expr in substitutions.items()
                }
                substitutions[variable] = value
                changed = True
            pending = remaining
        return Elimination(substitutions, pending, consistent=True)


def _solve_affine(constraint: sympy.Expr):
    for variable in sorted(constraint.free_symbols, key=lambda s: s.name):
        poly = sympy.Poly(constraint, variable)
        if poly.degree() != 1:
            continue
        coefficient = poly.coeff_monomial(variable)
        if not coefficient.is_number:
            continue
        rest = sympy.expand(constraint - coefficient * variable)
        return variable, sympy.expand(-rest / coefficient)
    return None


class Elimination:
    def __init__(
        self,
        substitutions: dict[sympy.Symbol, sympy.Expr],
        residual: list[sympy.Expr],
        consistent: bool,
    ):
        self.substitutions = substitutions
        self.residual = residual
        self.consistent = consistent

    @property
    def complete(self) -> bool:
        return self.consistent and not self.residual

    def apply(self, expr) -> sympy.Expr:
        return sympy.expand(sympy.sympify(expr).subs(self.substitutions))

    def eliminated(self) -> set[str]:
        return {symbol.name for symbol in self.substitutions}
