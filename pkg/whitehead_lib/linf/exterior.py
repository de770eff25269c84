"""Words of the free graded-commutative coalgebra on a suspended basis.

A word is an ascending tuple of basis names; names whose suspension is odd
never repeat.
"""

from itertools import combinations
from typing import Iterator, Mapping, Sequence

from ..exceptions import DegreeError
from ..graded import GradedVector, koszul_sign, koszul_sort

Word = tuple[str, ...]


class ExteriorWords:
    def __init__(self, names: Sequence[str], degrees: Mapping[str, int]):
        self.names = list(names)
        self.position = {name: index for index, name in enumerate(self.names)}
        self.suspended = {name: degrees[name] + 1 for name in self.names}

    def canonical(self, items: Sequence[str]) -> tuple[Word, int]:
        return koszul_sort(
            tuple(items), key=self.position.__getitem__, degree=self.suspended.__getitem__
        )

    def degree(self, word: Word) -> int:
        return sum(self.suspended[name] for name in word)

    def subset_sign(self, word: Word, chosen: Sequence[int]) -> int:
        """Koszul sign of moving the chosen positions to the front."""
        chosen_set = set(chosen)
        perm = list(chosen) + [i for i in range(len(word)) if i not in chosen_set]
        return koszul_sign(perm, [self.suspended[name] for name in word])

    def split(self, word: Word, size: int) -> Iterator[tuple[int, Word, Word]]:
        """(sign, chosen, rest) over all size-subsets of positions."""
        for chosen in combinations(range(len(word)), size):
            sign = self.subset_sign(word, chosen)
            chosen_set = set(chosen)
            yield (
                sign,
                tuple(word[i] for i in chosen),
                tuple(word[i] for i in range(len(word)) if i not in chosen_set),
            )

    def wedge(self, left: dict, right: dict) -> GradedVector:
        result = GradedVector()
        for a, ca in left.items():
            for b, cb in right.items():
                word, sign = self.canonical(a + b)
                if sign:
                    result.iadd_coef(word, sign * ca * cb)
        return result

    def words(
        self,
        max_degree: int | None = None,
        max_length: int | None = None,
        min_length: int = 0,
    ) -> list[Word]:
        """All canonical words within the bounds, shortest first."""
        if max_length is None:
            if max_degree is None or any(d <= 0 for d in self.suspended.values()):
                raise DegreeError(
                    "Word enumeration needs a length bound unless all suspended degrees are positive"
                )
        found: list[Word] = []

        def _walk(start: int, prefix: Word, degree: int):
            if len(prefix) >= min_length:
                found.append(prefix)
            if max_length is not None and len(prefix) >= max_length:
                return
            for index in range(start, len(self.names)):
                name = self.names[index]
                new_degree = degree + self.suspended[name]
                if max_degree is not None and self.suspended[name] > 0 and new_degree > max_degree:
                    continue
                following = index if self.suspended[name] & 1 == 0 else index + 1
                _walk(following, prefix + (name,), new_degree)

        _walk(0, (), 0)
        if max_degree is not None:
            found = [word for word in found if self.degree(word) <= max_degree]
        found.sort(key=lambda w: (len(w), [self.position[n] for n in w]))
        return found
