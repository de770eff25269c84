from fractions import Fraction

from ..graded import GradedVector
from ..utils.linear_algebra import Subquotient, rank

Entry = tuple[int, int]


class SSPage:
    """Page E^k: subquotients per (filtration, total degree) and the matrices of d^k.

    ``differentials[(p, n)]`` holds, for each representative of E^k_p in
    degree n, its image coordinates in E^k_{p-k} in degree n - 1.
    """

    def __init__(
        self,
        k: int,
        entries: dict[Entry, Subquotient],
        differentials: dict[Entry, list[list[Fraction]]],
        certified_degree: int,
        certified_length: int | None,
    ):
        self.k = k
        self.entries = entries
        self.differentials = differentials
        self.certified_degree = certified_degree
        self.certified_length = certified_length

    def dimension(self, p: int, degree: int) -> int:
        entry = self.entries.get((p, degree))
        return entry.dimension if entry is not None else 0

    def dimensions(self) -> dict[Entry, int]:
        return {key: entry.dimension for key, entry in self.entries.items() if entry.dimension}

    def total_dimension(self, degree: int) -> int:
        return sum(
            entry.dimension for (p, n), entry in self.entries.items() if n == degree
        )

    def representatives(self, p: int, degree: int) -> list[GradedVector]:
        entry = self.entries.get((p, degree))
        return entry.representatives if entry is not None else []

    def differential(self, p: int, degree: int) -> list[list[Fraction]]:
        return self.differentials.get((p, degree), [])

    def differential_rank(self, p: int, degree: int) -> int:
        rows = self.differential(p, degree)
        return rank([GradedVector(enumerate(row)) for row in rows])

    def nonzero_differentials(self):
        """(p, degree, representative index, image coordinates) for every nonzero image."""
        for (p, degree), rows in sorted(self.differentials.items()):
            for index, row in enumerate(rows):
                if any(row):
                    yield p, degree, index, row

    def is_differential_zero(self) -> bool:
        return next(self.nonzero_differentials(), None) is None

    def homology_dimension(self, p: int, degree: int) -> int | None:
        """dim H(E^k, d^k) at (p, degree), or None when the incoming map is out of range."""
        if degree + 1 > self.certified_degree:
            return None
        incoming = (p + self.k, degree + 1)
        if incoming not in self.entries and self._outside_length(p + self.k):
            return None
        return (
            self.dimension(p, degree)
            - self.differential_rank(p, degree)
            - self.differential_rank(*incoming)
        )

    def _outside_length(self, p: int) -> bool:
        return self.certified_length is not None and p > self.certified_length

    def squares_to_zero(self) -> bool:
        for (p, degree), rows in self.differentials.items():
            following = self.differential(p - self.k, degree - 1)
            if not following:
                continue
            for row in rows:
                image = [Fraction(0)] * len(following[0])
                for coef, target_row in zip(row, following):
                    if coef:
                        image = [a + coef * b for a, b in zip(image, target_row)]
                if any(image):
                    return False
        return True

    def __repr__(self):
        return f"SSPage(k={self.k}, dimensions={self.dimensions()})"
