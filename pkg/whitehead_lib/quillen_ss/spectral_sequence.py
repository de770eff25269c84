"""Spectral sequence of the word-length filtration on Quillen chains.

With F_p the words of length at most p, Z^k_p = F_p ∩ δ⁻¹(F_{p-k}),
D^k_p = F_p ∩ δ(F_{p+k}) and E^k_p = Z^k_p / (Z^{k-1}_{p-1} + D^{k-1}_p),
computed separately in every total degree.
"""

import logging
from fractions import Fraction

from ..exceptions import SignConventionError, TruncationError
from ..graded import GradedVector
from ..linf.exterior import Word
from ..utils.linear_algebra import Subquotient, combine, kernel, rank
from .FilteredCDGC import FilteredCDGC
from .SSPage import SSPage

_LOGGER = logging.getLogger(__name__)


def longest_words_first(word: Word):
    return (-len(word), word)


def _filtration(chains: FilteredCDGC, p: int, degree: int) -> list[GradedVector]:
    if p <= 0:
        return []
    return [GradedVector({w: 1}) for w in chains.filtration_words(p, degree)]


def _above(vector: dict, p: int) -> GradedVector:
    return GradedVector((w, c) for w, c in vector.items() if len(w) > p)


def cycles_mod_filtration(
    chains: FilteredCDGC, k: int, p: int, degree: int
) -> list[GradedVector]:
    """Z^k_p in one degree: elements of F_p whose boundary lies in F_{p-k}."""
    basis = _filtration(chains, p, degree)
    images = [_above(chains.differential(vector), p - k) for vector in basis]
    return [combine(relation, basis) for relation in kernel(images)]


def boundaries_in_filtration(
    chains: FilteredCDGC, k: int, p: int, degree: int
) -> list[GradedVector]:
    """D^k_p in one degree: boundaries of F_{p+k} that lie in F_p."""
    images = [chains.differential(v) for v in _filtration(chains, p + k, degree + 1)]
    relations = kernel([_above(image, p) for image in images])
    return [combine(relation, images) for relation in relations]


def _certified_degree(chains: FilteredCDGC, max_degree: int | None) -> int:
    top = chains.max_degree - 1
    if max_degree is None:
        return top
    if max_degree > top:
        raise TruncationError(
            f"Pages through degree {max_degree} need chains through degree "
            f"{max_degree + 1}, have {chains.max_degree}"
        )
    return max_degree


def page(chains: FilteredCDGC, k: int, max_degree: int | None = None) -> SSPage:
    if k < 0:
        raise ValueError("Page index must be non-negative")
    top = _certified_degree(chains, max_degree)
    certified_length = None
    if chains.max_length is not None:
        certified_length = chains.max_length - max(k - 1, 0)
    entries: dict[tuple[int, int], Subquotient] = {}
    for degree in [n for n in chains.degrees() if n <= top]:
        for p in range(1, chains.top_length(degree) + 1):
            if certified_length is not None and p > certified_length:
                continue
            numerator = cycles_mod_filtration(chains, k, p, degree)
            denominator = cycles_mod_filtration(
                chains, k - 1, p - 1, degree
            ) + boundaries_in_filtration(chains, k - 1, p, degree)
            entries[(p, degree)] = Subquotient(
                numerator, denominator, pivot_key=longest_words_first
            )
    differentials: dict[tuple[int, int], list[list[Fraction]]] = {}
    for (p, degree), entry in entries.items():
        target = entries.get((p - k, degree - 1))
        rows = []
        for representative in entry.representatives:
            image = chains.differential(representative)
            if target is None:
                # E_{p-k} is zero in that degree
                rows.append([])
                continue
            coords = target.coordinates(image)
            if coords is None:
                raise SignConventionError(
                    f"d^{k} of a class in E_{p} (degree {degree}) is not a cycle of the page"
                )
            rows.append(coords)
        differentials[(p, degree)] = rows
    result = SSPage(k, entries, differentials, top, certified_length)
    _LOGGER.debug("E^%d through degree %d: %s", k, top, result.dimensions())
    return result


class CollapseReport:
    def __init__(
        self,
        from_page: int,
        checked_pages: list[int],
        certified_degree: int,
        counterexample: tuple[int, int, int, GradedVector] | None = None,
    ):
        self.from_page = from_page
        self.checked_pages = checked_pages
        self.certified_degree = certified_degree
        self.counterexample = counterexample

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self):
        return self.passed


def _max_length(chains: FilteredCDGC, top: int) -> int:
    return max((chains.top_length(n) for n in range(1, top + 2)), default=0)


def collapses_through(
    chains: FilteredCDGC, from_page: int, max_degree: int | None = None
) -> CollapseReport:
    """d^j = 0 for every j >= from_page, within the certified degrees.

    Pages beyond the longest word have no room for a differential, so
    only finitely many are checked.
    """
    top = _certified_degree(chains, max_degree)
    last = _max_length(chains, top)
    checked = []
    for j in range(from_page, last + 1):
        current = page(chains, j, top)
        checked.append(j)
        for p, degree, index, _ in current.nonzero_differentials():
            element = current.representatives(p, degree)[index]
            _LOGGER.debug("d^%d is nonzero on E_%d in degree %d", j, p, degree)
            return CollapseReport(from_page, checked, top, (j, p, degree, element))
    return CollapseReport(from_page, checked, top)


def stable_page(chains: FilteredCDGC, max_degree: int | None = None) -> SSPage:
    """E^∞ in the certified degrees: the first page past the longest word."""
    if chains.max_length is not None:
        raise TruncationError("The stable page needs chains without a word length bound")
    top = _certified_degree(chains, max_degree)
    return page(chains, _max_length(chains, top) + 1, top)


def total_homology(chains: FilteredCDGC, degree: int) -> int:
    """dim H_degree(Λ sL, δ) on the reduced chains."""
    if chains.max_length is not None:
        raise TruncationError("Total homology needs chains without a word length bound")
    if degree + 1 > chains.max_degree:
        raise TruncationError(
            f"Homology in degree {degree} needs chains through degree {degree + 1}"
        )
    words = chains.words(degree)
    images = [chains.word_differential(word) for word in words]
    cycles = len(kernel(images))
    boundaries = rank(chains.word_differential(w) for w in chains.words(degree + 1))
    return cycles - boundaries


def next_page_matches(current: SSPage, following: SSPage) -> bool:
    """dim E^{k+1} equals dim H(E^k, d^k) wherever both are certified."""
    for (p, degree) in set(current.entries) | set(following.entries):
        if (p, degree) not in following.entries:
            continue
        expected = current.homology_dimension(p, degree)
        if expected is None:
            continue
        if expected != following.dimension(p, degree):
            _LOGGER.debug(
                "E^%d_%d in degree %d has dimension %d, homology of E^%d gives %d",
                following.k,
                p,
                degree,
                following.dimension(p, degree),
                current.k,
                expected,
            )
            return False
    return True
