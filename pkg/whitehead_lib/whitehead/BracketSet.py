from fractions import Fraction
from typing import Mapping

import sympy

from ..utils.constraints import Elimination
from ..utils.rationals import sympy_to_fraction, to_sympy


class StageChoice:
    """One step of the extension: the lift chosen for a model generator."""

    def __init__(
        self,
        generator: str,
        degree: int,
        fresh_parameters: list[str],
        constraints: list[sympy.Expr],
    ):
        self.generator = generator
        self.degree = degree
        self.fresh_parameters = fresh_parameters
        self.constraints = constraints

    def __repr__(self):
        return (
            f"StageChoice({self.generator}, degree={self.degree}, "
            f"fresh={self.fresh_parameters}, constraints={len(self.constraints)})"
        )


class BracketSet:
    """Higher bracket set as a homology class with polynomial coordinates.

    ``coordinates`` maps class names of the target homology in ``degree`` to
    polynomials in the free parameters, after eliminating every constraint
    that could be solved for a parameter; ``constraints`` are what remains.
    An empty set has no coordinates.
    """

    def __init__(
        self,
        degree: int,
        coordinates: Mapping[str, sympy.Expr] | None,
        parameters: list[str],
        elimination: Elimination | None,
        provenance: list[StageChoice],
    ):
        self.degree = degree
        self.coordinates = dict(coordinates) if coordinates is not None else None
        self.parameters = parameters
        self.elimination = elimination
        self.provenance = provenance

    @classmethod
    def empty(cls, degree: int, parameters: list[str], provenance: list[StageChoice]):
        return cls(degree, None, parameters, None, provenance)

    @property
    def is_empty(self) -> bool:
        return self.coordinates is None

    @property
    def constraints(self) -> list[sympy.Expr]:
        return list(self.elimination.residual) if self.elimination else []

    @property
    def free_parameters(self) -> list[sympy.Symbol]:
        """Parameters left after elimination, in order of appearance."""
        if self.is_empty:
            return []
        eliminated = self.elimination.eliminated()
        return [sympy.Symbol(name) for name in self.parameters if name not in eliminated]

    def is_constant(self) -> bool:
        return not self.is_empty and all(
            value.is_number for value in self.coordinates.values()
        )

    def full_assignment(self, values: Mapping[str, object]) -> dict[str, Fraction]:
        """Values of all parameters from values of the free ones (missing ones are 0)."""
        free = {
            symbol: to_sympy(values.get(symbol.name, 0)) for symbol in self.free_parameters
        }
        result = {symbol.name: sympy_to_fraction(value) for symbol, value in free.items()}
        for symbol, expr in self.elimination.substitutions.items():
            result[symbol.name] = sympy_to_fraction(expr.subs(free))
        return result

    def value_at(self, values: Mapping[str, object]) -> dict[str, Fraction]:
        """Class coordinates at a specialization of the free parameters."""
        free = {
            symbol: to_sympy(values.get(symbol.name, 0)) for symbol in self.free_parameters
        }
        return {
            name: sympy_to_fraction(expr.subs(free))
            for name, expr in self.coordinates.items()
        }

    def render(self) -> dict[str, str]:
        if self.is_empty:
            return {}
        return {
            name: str(expr) for name, expr in self.coordinates.items() if expr != 0
        }

    def __repr__(self):
        if self.is_empty:
            return f"BracketSet(empty, degree={self.degree})"
        return f"BracketSet(degree={self.degree}, {self.render()})"
