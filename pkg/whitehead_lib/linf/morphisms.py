import logging
from fractions import Fraction
from math import factorial
from typing import Iterator

from ..graded import (
    GradedVector,
    koszul_sign,
    permutation_sign,
    shuffles,
    unshuffle_blocks,
)
from .Coderivation import Coderivation
from .correspondence import brackets_to_coderivation
from .exterior import ExteriorWords, Word
from .LInfMorphismTables import LInfMorphismTables
from .LInfStructure import Args

_LOGGER = logging.getLogger(__name__)


class MorphismReport:
    def __init__(
        self,
        tabular_failure: int | None,
        coalgebra_failure: int | None,
        checked_up_to: int,
    ):
        self.tabular_failure = tabular_failure
        self.coalgebra_failure = coalgebra_failure
        self.checked_up_to = checked_up_to

    @property
    def tabular_passed(self) -> bool:
        return self.tabular_failure is None

    @property
    def coalgebra_passed(self) -> bool:
        return self.coalgebra_failure is None

    @property
    def agree(self) -> bool:
        return self.tabular_failure == self.coalgebra_failure

    @property
    def passed(self) -> bool:
        return self.tabular_passed and self.coalgebra_passed

    def __bool__(self):
        return self.passed


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def _single(name: str) -> GradedVector:
    return GradedVector({name: 1})


def morphism_lhs(f: LInfMorphismTables, args: Args) -> GradedVector:
    source = f.source
    n = len(args)
    degrees = [source.degrees[name] for name in args]
    result = GradedVector()
    for i in range(1, n + 1):
        j = n + 1 - i
        if not source.table(i) or not f.table(j):
            continue
        outer = -1 if (i * (j - 1)) & 1 else 1
        for sigma in shuffles(i, n - i):
            inner = source.bracket([args[k] for k in sigma[:i]])
            if not inner:
                continue
            sign = outer * koszul_sign(sigma, degrees) * permutation_sign(sigma)
            result.iadd_scaled(
                sign, f.evaluate([inner] + [_single(args[k]) for k in sigma[i:]])
            )
    return result


def morphism_rhs(f: LInfMorphismTables, args: Args) -> GradedVector:
    target = f.target
    n = len(args)
    degrees = [f.degrees[name] for name in args]
    result = GradedVector()
    for k in range(1, n + 1):
        if not target.table(k):
            continue
        weight = Fraction(1, factorial(k))
        for sizes in compositions(n, k):
            if any(not f.table(size) for size in sizes):
                continue
            parity = sum((k - l) * (sizes[l - 1] - 1) for l in range(1, k))
            block_sign = -1 if parity & 1 else 1
            for tau in unshuffle_blocks(sizes):
                sign = block_sign * koszul_sign(tau, degrees) * permutation_sign(tau)
                images = []
                start = 0
                passed = 0
                for size in sizes:
                    block = [args[t] for t in tau[start : start + size]]
                    if ((size - 1) * passed) & 1:
                        sign = -sign
                    passed += sum(f.degrees[name] for name in block)
                    images.append(f.component(block))
                    start += size
                if all(images):
                    result.iadd_scaled(weight * sign, target.evaluate(images))
    return result


def set_partitions(size: int) -> Iterator[list[tuple[int, ...]]]:
    """Partitions of range(size) into blocks ordered by their least element."""
    if size == 0:
        yield []
        return
    for partition in set_partitions(size - 1):
        last = size - 1
        for index in range(len(partition)):
            grown = partition[index] + (last,)
            yield partition[:index] + [grown] + partition[index + 1 :]
        yield partition + [(last,)]


def coalgebra_map(
    f: LInfMorphismTables,
    source_words: ExteriorWords,
    target_words: ExteriorWords,
    word: Word,
) -> GradedVector:
    """The coalgebra morphism F determined by the components f_k, on a word."""
    suspended = [source_words.suspended[name] for name in word]
    result = GradedVector()
    for partition in set_partitions(len(word)):
        blocks = sorted(partition, key=lambda block: block[0])
        perm = [index for block in blocks for index in block]
        sign = koszul_sign(perm, suspended)
        product = GradedVector({(): 1})
        for block in blocks:
            names = [word[index] for index in block]
            k = len(names)
            exponent = k * (k - 1) // 2 + sum(
                (k - i) * source_words.suspended[name]
                for i, name in enumerate(names, start=1)
            )
            image = f.component(names) * (-1 if exponent & 1 else 1)
            if not image:
                product = GradedVector()
                break
            product = target_words.wedge(product, image.map_keys(lambda name: (name,)))
        result.iadd_scaled(sign, product)
    return result


def check_linf_morphism(f: LInfMorphismTables, up_to_n: int) -> MorphismReport:
    """Tabular morphism equation cross-checked on the coalgebra level."""
    tabular_failure = None
    for n in range(1, up_to_n + 1):
        for args in f.canonical_tuples(n):
            if morphism_lhs(f, args) != morphism_rhs(f, args):
                tabular_failure = n
                break
        if tabular_failure is not None:
            break

    source_delta: Coderivation = brackets_to_coderivation(f.source)
    target_delta: Coderivation = brackets_to_coderivation(f.target)
    source_words = source_delta.words
    target_words = target_delta.words
    coalgebra_failure = None
    for word in source_words.words(max_length=up_to_n, min_length=1):
        left = GradedVector()
        for image_word, coef in source_delta.apply_word(word).items():
            left.iadd_scaled(
                coef, coalgebra_map(f, source_words, target_words, image_word)
            )
        right = target_delta.apply(coalgebra_map(f, source_words, target_words, word))
        if left != right:
            coalgebra_failure = len(word)
            break
    if tabular_failure != coalgebra_failure:
        _LOGGER.warning(
            "Morphism checks disagree: tabular fails at %s, coalgebra at %s",
            tabular_failure,
            coalgebra_failure,
        )
    return MorphismReport(tabular_failure, coalgebra_failure, up_to_n)
