from typing import Mapping

from ..exceptions import DegreeError, UnknownGeneratorError
from ..free_lie import GeneratorSet, LieExpr, degree_basis, expand_to_tensor
from ..free_lie.tensor import Word, tensor_bracket, word_degree
from ..graded import GradedVector
from .LieTarget import LieTarget
from .ParamElement import ParamElement


class DGLPresentation(LieTarget):
    """Free graded Lie algebra with a differential given on generators."""

    def __init__(
        self,
        generators: GeneratorSet,
        differential: Mapping[str, LieExpr] | None = None,
    ):
        super().__init__(generators.truncation)
        self.generators = generators
        self.degrees = generators.degrees
        self.differential_map: dict[str, LieExpr] = {}
        self._generator_images: dict[str, GradedVector] = {}
        self._word_cache: dict[Word, GradedVector] = {}
        self._pieces: dict[int, list] = {}
        for name, expr in (differential or {}).items():
            if name not in generators:
                raise UnknownGeneratorError(name)
            for leaf in expr.leaves():
                if leaf not in generators:
                    raise UnknownGeneratorError(leaf)
            degree = expr.degree(self.degrees)
            if degree is not None and degree != self.degrees[name] - 1:
                raise DegreeError(
                    f"d({name}) has degree {degree}, expected {self.degrees[name] - 1}"
                )
            self.differential_map[name] = expr
        for name in generators.names:
            expr = self.differential_map.get(name, LieExpr.zero())
            self._generator_images[name] = GradedVector(
                expand_to_tensor(expr, generators), degree=self.degrees[name] - 1
            )

    def generator_differential(self, name: str) -> LieExpr:
        if name not in self.generators:
            raise UnknownGeneratorError(name)
        return self.differential_map.get(name, LieExpr.zero())

    def expand(self, expr: LieExpr) -> GradedVector:
        return expand_to_tensor(expr, self.generators)

    def element(self, expr: LieExpr) -> ParamElement:
        degree = expr.degree(self.degrees)
        if degree is None:
            raise DegreeError("The zero expression has no degree; pass a ParamElement")
        return ParamElement.constant(self.expand(expr), degree)

    def word_differential(self, word: Word) -> GradedVector:
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        result = GradedVector(degree=word_degree(word, self.degrees) - 1)
        passed = 0
        for index, name in enumerate(word):
            image = self._generator_images[name]
            if image:
                sign = -1 if passed & 1 else 1
                head, tail = word[:index], word[index + 1 :]
                for inner, coef in image.items():
                    result.iadd_coef(head + inner + tail, sign * coef)
            passed += self.degrees[name]
        self._word_cache[word] = result
        return result

    def vector_differential(self, vector: dict, degree: int) -> GradedVector:
        result = GradedVector(degree=degree - 1)
        for word, coef in vector.items():
            result.iadd_scaled(coef, self.word_differential(word))
        return result

    def vector_bracket(self, left, right, left_degree, right_degree) -> GradedVector:
        return tensor_bracket(left, right, left_degree, right_degree)

    def basis(self, degree: int) -> list[tuple[LieExpr, GradedVector]]:
        cached = self._pieces.get(degree)
        if cached is None:
            cached = degree_basis(self.generators, degree)
            self._pieces[degree] = cached
        return cached

    def piece(self, degree: int) -> list[GradedVector]:
        return [vector for _, vector in self.basis(degree)]

    def describe(self, degree: int, combination: dict) -> LieExpr:
        basis = self.basis(degree)
        result = LieExpr.zero()
        for index, coef in combination.items():
            result = result + basis[index][0] * coef
        return result

    def __repr__(self):
        return (
            f"DGLPresentation({len(self.generators)} generators, "
            f"truncation {self.truncation})"
        )
