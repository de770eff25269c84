"""Exact sparse Gaussian elimination over the rationals.

Vectors are ``GradedVector`` dicts. Elimination is incremental: rows are kept
in insertion order, each row vanishing at the pivots of all earlier rows, so a
single ordered pass reduces any vector.
"""

import logging
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from ..graded import GradedVector

_LOGGER = logging.getLogger(__name__)


def _default_pivot_key(key):
    return key


class EchelonRow:
    __slots__ = ("pivot", "vector", "combination")

    def __init__(self, pivot: Hashable, vector: GradedVector, combination: GradedVector):
        self.pivot = pivot
        self.vector = vector
        self.combination = combination


class EchelonForm:
    """Incremental row echelon form that remembers how rows were built.

    Every vector added carries a tag; rows store their expression in the
    tags of the independent inputs, and dependent inputs are recorded as
    relations (kernel vectors over tags).
    """

    def __init__(self, pivot_key: Callable[[Hashable], object] | None = None):
        self.pivot_key = pivot_key or _default_pivot_key
        self.rows: list[EchelonRow] = []
        self.relations: list[GradedVector] = []
        self.independent_tags: list[Hashable] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: dict) -> tuple[GradedVector, GradedVector]:
        """Return (residual, coefficients) with vector = sum(coef*input) + residual."""
        residual = GradedVector(vector)
        coefficients = GradedVector()
        for row in self.rows:
            value = residual.get(row.pivot)
            if value is None:
                continue
            factor = value / row.vector[row.pivot]
            residual.iadd_scaled(-factor, row.vector)
            coefficients.iadd_scaled(factor, row.combination)
        return residual, coefficients

    def add(self, vector: dict, tag: Hashable = None) -> bool:
        residual, coefficients = self.reduce(vector)
        combination = GradedVector({tag: 1}) if tag is not None else GradedVector()
        combination.iadd_scaled(-1, coefficients)
        if residual.is_zero():
            self.relations.append(combination)
            return False
        pivot = min(residual, key=self.pivot_key)
        self.rows.append(EchelonRow(pivot, residual, combination))
        self.independent_tags.append(tag)
        return True

    def contains(self, vector: dict) -> bool:
        return self.reduce(vector)[0].is_zero()

    def express(self, vector: dict) -> GradedVector | None:
        """Coefficients over tags expressing the vector, or None if outside the span."""
        residual, coefficients = self.reduce(vector)
        if not residual.is_zero():
            return None
        return coefficients


def echelon_of(
    vectors: Iterable[dict],
    pivot_key: Callable[[Hashable], object] | None = None,
) -> EchelonForm:
    echelon = EchelonForm(pivot_key)
    for index, vector in enumerate(vectors):
        echelon.add(vector, index)
    return echelon


def rank(vectors: Iterable[dict]) -> int:
    return echelon_of(vectors).rank


def kernel(images: Sequence[dict]) -> list[GradedVector]:
    """Basis of the kernel of the map sending basis vector i to images[i].

    Kernel vectors are combinations over the indices 0..len(images)-1.
    """
    return echelon_of(images).relations


def independent_subset(
    vectors: Sequence[dict],
    pivot_key: Callable[[Hashable], object] | None = None,
) -> list[int]:
    return echelon_of(vectors, pivot_key).independent_tags


def combine(coefficients: dict, vectors: Sequence[dict]) -> GradedVector:
    result = GradedVector()
    for index, coef in coefficients.items():
        result.iadd_scaled(coef, vectors[index])
    return result


class Subquotient:
    """Quotient of span(numerator) by span(denominator), denominator inside numerator.

    Representatives are numerator vectors reduced against the denominator
    first, so the components the pivot order prefers are cleared.
    """

    def __init__(
        self,
        numerator: Sequence[dict],
        denominator: Sequence[dict],
        pivot_key: Callable[[Hashable], object] | None = None,
        reduce_representatives: bool = True,
    ):
        self._denominator = EchelonForm(pivot_key)
        self._full = EchelonForm(pivot_key)
        for index, vector in enumerate(denominator):
            self._denominator.add(vector)
            self._full.add(vector, ("den", index))
        self.representatives: list[GradedVector] = []
        self.representative_indices: list[int] = []
        for index, vector in enumerate(numerator):
            if reduce_representatives:
                vector = self._denominator.reduce(vector)[0]
            if self._full.add(vector, ("rep", len(self.representatives))):
                self.representatives.append(GradedVector(vector))
                self.representative_indices.append(index)
        _LOGGER.debug(
            "Subquotient of dimension %d (denominator rank %d)",
            len(self.representatives),
            self._denominator.rank,
        )

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    @property
    def denominator_rank(self) -> int:
        return self._denominator.rank

    def in_denominator(self, vector: dict) -> bool:
        return self._denominator.contains(vector)

    def coordinates(self, vector: dict) -> list[Fraction] | None:
        """Class coordinates on the representatives, or None outside the numerator."""
        coefficients = self._full.express(vector)
        if coefficients is None:
            return None
        coords = [Fraction(0)] * len(self.representatives)
        for tag, value in coefficients.items():
            if tag[0] == "rep":
                coords[tag[1]] = value
        return coords

    def reduce(self, vector: dict) -> GradedVector:
        """Residual modulo the denominator and the representatives."""
        return self._full.reduce(vector)[0]
