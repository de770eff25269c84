import logging
from typing import Iterable, Mapping, Sequence

from ..dgl.operations import DSquaredReport
from ..exceptions import DegreeError, UnknownGeneratorError
from ..graded import GradedPolynomial

_LOGGER = logging.getLogger(__name__)


class SullivanAlgebraPresentation:
    """Free graded-commutative algebra ΛV with a differential on generators.

    ``order`` is the declared KS-order of the generators; monomials are
    written in that order.
    """

    def __init__(
        self,
        generators: Iterable[tuple[str, int]],
        differential: Mapping[str, GradedPolynomial] | None = None,
        order: Sequence[str] | None = None,
    ):
        self.generators = [(name, int(degree)) for name, degree in generators]
        self.degrees = dict(self.generators)
        if len(self.degrees) != len(self.generators):
            raise DegreeError("Generator names must be unique")
        self.order = tuple(order) if order is not None else tuple(self.degrees)
        if sorted(self.order) != sorted(self.degrees):
            raise DegreeError("The KS-order must list every generator exactly once")
        self.differential: dict[str, GradedPolynomial] = {}
        for name, value in (differential or {}).items():
            self.set_differential(name, value)

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial(self.degrees, self.order)

    def generator(self, name: str, coef=1) -> GradedPolynomial:
        return self.zero().generator(name, coef)

    def polynomial(self, terms: Mapping[tuple[str, ...], object]) -> GradedPolynomial:
        return GradedPolynomial(self.degrees, self.order, terms)

    def set_differential(self, name: str, value: GradedPolynomial) -> None:
        if name not in self.degrees:
            raise UnknownGeneratorError(name)
        degree = value.degree()
        if not value.is_zero() and degree != self.degrees[name] + 1:
            raise DegreeError(
                f"d({name}) must have degree {self.degrees[name] + 1}, got {degree}"
            )
        self.differential[name] = value

    def d(self, name: str) -> GradedPolynomial:
        if name not in self.degrees:
            raise UnknownGeneratorError(name)
        return self.differential.get(name, self.zero())

    def apply(self, value: GradedPolynomial) -> GradedPolynomial:
        return value.apply_derivation(self.differential, 1)

    def word_length_part(self, name: str, length: int) -> GradedPolynomial:
        return self.d(name).word_length_part(length)

    def check_d_squared(self) -> DSquaredReport:
        for name in self.order:
            twice = self.apply(self.d(name))
            if not twice.is_zero():
                _LOGGER.debug("d^2(%s) = %s", name, twice.render())
                return DSquaredReport(False, name, twice)
        return DSquaredReport(True)

    def is_ks_ordered(self) -> bool:
        """Each d(v) only involves generators strictly before v."""
        for index, name in enumerate(self.order):
            earlier = set(self.order[:index])
            for word in self.d(name).terms:
                if not set(word) <= earlier:
                    return False
        return True

    def is_minimal(self) -> bool:
        """No linear or constant part in any differential."""
        return all(not self.d(name).word_lengths() & {0, 1} for name in self.order)

    def render(self) -> dict[str, str]:
        return {name: self.d(name).render() for name in self.order}

    def __repr__(self):
        return f"SullivanAlgebraPresentation({len(self.generators)} generators)"
