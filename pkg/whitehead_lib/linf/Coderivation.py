import logging
from typing import Iterable, Mapping, Sequence

from ..graded import GradedVector
from .exterior import ExteriorWords, Word
from .LInfStructure import SkewTables

_LOGGER = logging.getLogger(__name__)


class Coderivation(SkewTables):
    """Components h_k of a degree -1 coderivation on the coalgebra over sL.

    Tables are graded symmetric in the suspended degrees; table keys and
    values use the names of the unsuspended basis. The extension delta_k of
    h_k acts on words by splitting off every k-element subset.
    """

    def __init__(
        self,
        basis: Iterable[tuple[str, int]],
        components: Mapping[int, Mapping[Sequence[str], Mapping[str, object]]] | None = None,
    ):
        super().__init__(basis, antisymmetric=False, shift=1)
        self.words = ExteriorWords(self.names, self.degrees)
        self._cache: dict[Word, GradedVector] = {}
        for arity, table in (components or {}).items():
            for args, value in table.items():
                self.set_component(args, value)

    def set_component(self, args: Sequence[str], value: Mapping[str, object]) -> None:
        self._store(args, value)
        self._cache.clear()

    def component(self, args: Sequence[str]) -> GradedVector:
        return self.lookup(args)

    def extension(self, arity: int, word: Word) -> GradedVector:
        """delta_k on a canonical word."""
        result = GradedVector()
        table = self.tables.get(arity)
        if not table or len(word) < arity:
            return result
        for sign, chosen, rest in self.words.split(word, arity):
            value = self.lookup(chosen)
            for name, coef in value.items():
                target, reorder = self.words.canonical((name,) + rest)
                if reorder:
                    result.iadd_coef(target, sign * reorder * coef)
        return result

    def apply_word(self, word: Word) -> GradedVector:
        cached = self._cache.get(word)
        if cached is None:
            cached = GradedVector()
            for arity in self.arities():
                cached.iadd_scaled(1, self.extension(arity, word))
            self._cache[word] = cached
        return cached

    def apply(self, vector: dict) -> GradedVector:
        result = GradedVector()
        for word, coef in vector.items():
            result.iadd_scaled(coef, self.apply_word(word))
        return result

    def __repr__(self):
        return f"Coderivation(dim={len(self.names)}, arities={self.arities()})"


class CodifferentialReport:
    def __init__(self, passed: bool, checked_words: int, failing_word: Word | None = None, value=None):
        self.passed = passed
        self.checked_words = checked_words
        self.failing_word = failing_word
        self.value = value

    def __bool__(self):
        return self.passed


def check_codifferential(
    coderivation: Coderivation,
    max_length: int | None = None,
    max_degree: int | None = None,
) -> CodifferentialReport:
    """delta^2 = 0 on every word within the bounds."""
    words = coderivation.words.words(max_degree=max_degree, max_length=max_length, min_length=1)
    for word in words:
        square = coderivation.apply(coderivation.apply_word(word))
        if square:
            _LOGGER.debug("delta^2%s = %s", word, dict(square))
            return CodifferentialReport(False, len(words), word, square)
    return CodifferentialReport(True, len(words))
