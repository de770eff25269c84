"""Iterated reduced diagonals on Λ sL, used to cross-check the filtration."""

from ..graded import GradedVector
from ..linf.exterior import ExteriorWords, Word
from ..utils.linear_algebra import combine, kernel
from .FilteredCDGC import FilteredCDGC


def reduced_diagonal(words: ExteriorWords, word: Word) -> GradedVector:
    """Sum of sign * (chosen ⊗ rest) over nonempty proper sub-words."""
    result = GradedVector()
    for size in range(1, len(word)):
        for sign, chosen, rest in words.split(word, size):
            result.iadd_coef((chosen, rest), sign)
    return result


def iterated_reduced_diagonal(words: ExteriorWords, word: Word, times: int) -> GradedVector:
    """Apply the reduced diagonal ``times`` times, always to the last factor."""
    current = GradedVector({(word,): 1})
    for _ in range(times):
        following = GradedVector()
        for factors, coef in current.items():
            for (chosen, rest), sign in reduced_diagonal(words, factors[-1]).items():
                following.iadd_coef(factors[:-1] + (chosen, rest), coef * sign)
        current = following
    return current


def diagonal_filtration(chains: FilteredCDGC, p: int, degree: int) -> list[GradedVector]:
    """Basis of the kernel of the p-fold reduced diagonal in one degree."""
    words = chains.coderivation.words
    basis = [GradedVector({word: 1}) for word in chains.words(degree)]
    images = [
        iterated_reduced_diagonal(words, word, p) for word in chains.words(degree)
    ]
    return [combine(relation, basis) for relation in kernel(images)]
