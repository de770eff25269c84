from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from ..exceptions import DegreeError, UnknownGeneratorError
from ..graded import GradedVector, koszul_sign, to_fraction
from ..utils.rationals import sympy_to_fraction


class PairingTable:
    """Evaluation <v ; sx> between generators of V = (sL)^# and sL.

    By default the generators are dual to the basis of L of the same names.
    The pairing extends to words by summing over the orderings of the
    generators, with the suspended word read backwards:
    <v_1...v_k ; sx_k ∧ ... ∧ sx_1> = Σ_σ ε_σ <v_σ(1) ; sx_1> ... <v_σ(k) ; sx_k>.
    """

    def __init__(
        self,
        degrees: Mapping[str, int],
        table: Mapping[tuple[str, str], object] | None = None,
    ):
        self.degrees = dict(degrees)
        self._table: dict[tuple[str, str], Fraction] | None = None
        if table is not None:
            self._table = {key: to_fraction(value) for key, value in table.items() if value}

    def basis_value(self, generator: str, name: str) -> Fraction:
        if generator not in self.degrees:
            raise UnknownGeneratorError(generator)
        if self._table is None:
            return Fraction(1) if generator == name else Fraction(0)
        return self._table.get((generator, name), Fraction(0))

    def value(self, generator: str, element: Mapping[str, object] | str) -> Fraction:
        """<v ; sx> for an element x of L given as a name or a combination."""
        if isinstance(element, str):
            return self.basis_value(generator, element)
        total = Fraction(0)
        for name, coef in element.items():
            total += to_fraction(coef) * self.basis_value(generator, name)
        return total

    def suspended_degree(self, element: Mapping[str, object] | str) -> int:
        """|sx|, read off the generators dual to the names in x."""
        names = [element] if isinstance(element, str) else [n for n, c in element.items() if c]
        found = {self.degrees[name] for name in names if name in self.degrees}
        if len(found) != 1:
            raise DegreeError(f"Cannot read a single degree from {element!r}")
        return found.pop()

    def pair(
        self, word: Sequence[str], elements: Sequence[Mapping[str, object] | str]
    ) -> Fraction:
        """<v_1...v_k ; sy_1 ∧ ... ∧ sy_k> for generators v and elements y of L."""
        k = len(word)
        if k != len(elements):
            return Fraction(0)
        degrees = [self.degrees[name] for name in word]
        reversed_elements = list(reversed(elements))
        total = Fraction(0)
        for sigma in permutations(range(k)):
            term = Fraction(1)
            for j, index in enumerate(sigma):
                term *= self.value(word[index], reversed_elements[j])
                if not term:
                    break
            if term:
                total += koszul_sign(sigma, degrees) * term
        return total

    def pair_polynomial(self, terms: Mapping[tuple, object], elements: Sequence) -> Fraction:
        """Pairing of a combination of words (word -> rational coefficient)."""
        total = Fraction(0)
        for word, coef in terms.items():
            if len(word) == len(elements):
                total += sympy_to_fraction(coef) * self.pair(word, elements)
        return total


def as_element(value) -> GradedVector:
    if isinstance(value, str):
        return GradedVector({value: 1})
    return GradedVector(value)
