import logging
from typing import Iterable, Mapping

import sympy

from ..exceptions import DegreeError, NonInvertibleFamilyError, UnknownGeneratorError
from ..graded import GradedPolynomial
from .SullivanAlgebraPresentation import SullivanAlgebraPresentation

_LOGGER = logging.getLogger(__name__)


class AutomorphismFamily:
    """Algebra endomorphism of ΛV with symbolic coefficients.

    Each generator v maps to c*v + p, p a polynomial in generators earlier in
    the KS-order; the family is invertible when every c is a product of the
    declared nonvanishing expressions and a nonzero rational.
    """

    def __init__(
        self,
        algebra: SullivanAlgebraPresentation,
        images: Mapping[str, GradedPolynomial],
        nonvanishing: Iterable[sympy.Expr] = (),
    ):
        self.algebra = algebra
        self.nonvanishing = {sympy.sympify(expr) for expr in nonvanishing}
        self.images: dict[str, GradedPolynomial] = {}
        for name in algebra.order:
            self.images[name] = images.get(name, algebra.generator(name))
        for name in images:
            if name not in algebra.degrees:
                raise UnknownGeneratorError(name)
        self._check_images()
        self._inverse: dict[str, GradedPolynomial] | None = None

    @classmethod
    def identity(cls, algebra: SullivanAlgebraPresentation) -> "AutomorphismFamily":
        return cls(algebra, {})

    def symbols(self) -> set[sympy.Symbol]:
        found = set()
        for image in self.images.values():
            found |= image.free_symbols()
        return found

    def diagonal(self, name: str) -> sympy.Expr:
        return self.images[name].coefficient((name,))

    def _check_images(self) -> None:
        for index, name in enumerate(self.algebra.order):
            image = self.images[name]
            degree = image.degree()
            if not image.is_zero() and degree != self.algebra.degrees[name]:
                raise DegreeError(f"f({name}) must have degree {self.algebra.degrees[name]}")
            earlier = set(self.algebra.order[:index])
            for word in image.terms:
                if word != (name,) and not set(word) <= earlier:
                    raise NonInvertibleFamilyError(
                        f"f({name}) involves generators not earlier than '{name}'"
                    )
            if not self.is_nonvanishing(self.diagonal(name)):
                raise NonInvertibleFamilyError(
                    f"The coefficient {self.diagonal(name)} of {name} in f({name}) "
                    "may vanish under the declared constraints"
                )

    def is_nonvanishing(self, expr: sympy.Expr) -> bool:
        expr = sympy.sympify(expr)
        if expr.is_zero:
            return False
        if expr.is_Rational:
            return True
        numerator, denominator = sympy.fraction(sympy.together(expr))
        _, factors = sympy.factor_list(numerator)
        return all(base in self.nonvanishing for base, _ in factors)

    def apply(self, value: GradedPolynomial) -> GradedPolynomial:
        return value.substitute(self.images)

    def inverse_images(self) -> dict[str, GradedPolynomial]:
        """f^-1 on generators, solved along the KS-order."""
        if self._inverse is None:
            inverse: dict[str, GradedPolynomial] = {}
            for name in self.algebra.order:
                image = self.images[name]
                coef = self.diagonal(name)
                rest = image - self.algebra.generator(name, coef)
                inverse[name] = (self.algebra.generator(name) - rest.substitute(inverse)).scale(
                    1 / coef
                )
            self._inverse = inverse
            _LOGGER.debug(
                "Inverse family: %s", {n: v.render() for n, v in inverse.items()}
            )
        return self._inverse

    def apply_inverse(self, value: GradedPolynomial) -> GradedPolynomial:
        return value.substitute(self.inverse_images())

    def __repr__(self):
        return f"AutomorphismFamily({ {n: v.render() for n, v in self.images.items()} })"
