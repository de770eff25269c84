"""The Lie model of a fat wedge of spheres and its attaching cycle.

Generators u_I run over the proper nonempty ascending index words I of
{1, ..., k}, with |u_I| = sum of n_i over I, minus 1. The differential sums
[u_{I1}, u_{I2}] over the splittings I = I1 ⊔ I2 whose first block holds the
least index of I, with coefficient ε·(-1)^{N1 + |I1||I2|}: ε is the Koszul
sign of the shuffle taken in the sphere dimensions n_i, N1 the sum of n_i
over I1.
"""

import logging
from itertools import combinations
from typing import Callable, Sequence

from ..const import MODEL_GENERATOR_PREFIX
from ..dgl import DGLPresentation, check_d_squared
from ..exceptions import DegreeError, SignConventionError, TruncationError
from ..free_lie import GeneratorSet, LieExpr
from ..graded import koszul_sign

_LOGGER = logging.getLogger(__name__)

IndexWord = tuple[int, ...]


def generator_name(word: IndexWord, k: int, prefix: str = MODEL_GENERATOR_PREFIX) -> str:
    separator = "_" if k > 9 else ""
    return prefix + separator.join(str(i) for i in word)


def index_words(k: int, proper: bool = True) -> list[IndexWord]:
    """Ascending index words, shortest first."""
    top = k - 1 if proper else k
    return [word for s in range(1, top + 1) for word in combinations(range(1, k + 1), s)]


def splittings(word: IndexWord) -> list[tuple[IndexWord, IndexWord, int]]:
    """(I1, I2, shuffle) with the least index in I1 and both blocks nonempty."""
    result = []
    rest = word[1:]
    for size in range(0, len(rest)):
        for chosen in combinations(range(1, len(word)), size):
            head = (0,) + chosen
            tail = tuple(i for i in range(len(word)) if i not in head)
            result.append(
                (tuple(word[i] for i in head), tuple(word[i] for i in tail), head + tail)
            )
    return result


def boundary_terms(
    word: IndexWord, dimensions: Sequence[int]
) -> list[tuple[int, IndexWord, IndexWord]]:
    """Signed splittings (coefficient, I1, I2) making up the differential of u_I."""
    degrees = [dimensions[i - 1] for i in word]
    terms = []
    for first, second, shuffle in splittings(word):
        n1 = sum(dimensions[i - 1] for i in first)
        sign = koszul_sign(shuffle, degrees)
        if (n1 + len(first) * len(second)) & 1:
            sign = -sign
        terms.append((sign, first, second))
    return terms


def boundary_expression(
    word: IndexWord, dimensions: Sequence[int], name: Callable[[IndexWord], str]
) -> LieExpr:
    result = LieExpr.zero()
    for sign, first, second in boundary_terms(word, dimensions):
        result = result + LieExpr.bracket(
            LieExpr.generator(name(first)), LieExpr.generator(name(second))
        ) * sign
    return result


class WhiteheadModel:
    def __init__(
        self,
        dimensions: Sequence[int],
        presentation: DGLPresentation,
        attaching_cycle: LieExpr,
    ):
        self.dimensions = list(dimensions)
        self.presentation = presentation
        self.attaching_cycle = attaching_cycle

    @property
    def k(self) -> int:
        return len(self.dimensions)

    @property
    def total_dimension(self) -> int:
        return sum(self.dimensions)

    @property
    def cycle_degree(self) -> int:
        return self.total_dimension - 2

    def name(self, word: IndexWord) -> str:
        return generator_name(word, self.k)

    def words(self) -> list[IndexWord]:
        return index_words(self.k)

    def degree(self, word: IndexWord) -> int:
        return sum(self.dimensions[i - 1] for i in word) - 1

    def boundary_terms(self, word: IndexWord) -> list[tuple[int, IndexWord, IndexWord]]:
        return boundary_terms(word, self.dimensions)

    def attaching_terms(self) -> list[tuple[int, IndexWord, IndexWord]]:
        return boundary_terms(tuple(range(1, self.k + 1)), self.dimensions)

    def __repr__(self):
        return f"WhiteheadModel(dimensions={self.dimensions})"


def build_model(dimensions: Sequence[int], truncation: int | None = None) -> WhiteheadModel:
    """Lie(U) with its differential and the attaching cycle w of degree N - 2."""
    dimensions = [int(n) for n in dimensions]
    k = len(dimensions)
    if k < 2:
        raise DegreeError("A higher bracket needs at least two classes")
    if any(n < 2 for n in dimensions):
        raise DegreeError("Sphere dimensions must be at least 2")
    total = sum(dimensions)
    if truncation is None:
        truncation = total - 1
    if truncation < total - 1:
        raise TruncationError(
            f"The model of {dimensions} needs truncation >= {total - 1}, have {truncation}"
        )

    def name(word: IndexWord) -> str:
        return generator_name(word, k)

    words = index_words(k)
    generators = GeneratorSet(
        [(name(word), sum(dimensions[i - 1] for i in word) - 1) for word in words],
        truncation,
    )
    differential = {
        name(word): boundary_expression(word, dimensions, name)
        for word in words
        if len(word) > 1
    }
    presentation = DGLPresentation(generators, differential)
    report = check_d_squared(presentation)
    if not report:
        raise SignConventionError(
            f"d^2({report.failing_generator}) != 0 in the model of {dimensions}"
        )
    attaching = boundary_expression(tuple(range(1, k + 1)), dimensions, name)
    if presentation.vector_differential(presentation.expand(attaching), total - 2):
        raise SignConventionError(f"The attaching cycle of {dimensions} is not a cycle")
    _LOGGER.debug(
        "Model of %s: %d generators, attaching cycle with %d terms",
        dimensions,
        len(words),
        len(attaching.terms),
    )
    return WhiteheadModel(dimensions, presentation, attaching)
