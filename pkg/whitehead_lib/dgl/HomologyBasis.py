from fractions import Fraction
from typing import Sequence

from ..graded import GradedVector
from ..utils.linear_algebra import EchelonForm


class HomologyBasis:
    """Homology of one degree: representatives, boundaries and class coordinates.

    ``piece`` is a basis of the whole degree, used to split off the non-cycle
    part of arbitrary vectors.
    """

    def __init__(
        self,
        degree: int,
        names: Sequence[str],
        representatives: Sequence[object],
        representative_vectors: Sequence[GradedVector],
        boundary_vectors: Sequence[GradedVector],
        cycle_dimension: int,
        piece: Sequence[GradedVector],
    ):
        self.degree = degree
        self.names = list(names)
        self.representatives = list(representatives)
        self.representative_vectors = list(representative_vectors)
        self.boundary_vectors = list(boundary_vectors)
        self.cycle_dimension = cycle_dimension
        self._echelon = EchelonForm()
        for index, vector in enumerate(self.boundary_vectors):
            self._echelon.add(vector, ("den", index))
        self.boundary_rank = self._echelon.rank
        for index, vector in enumerate(self.representative_vectors):
            self._echelon.add(vector, ("rep", index))
        for index, vector in enumerate(piece):
            self._echelon.add(vector, ("comp", index))

    @property
    def dimension(self) -> int:
        return len(self.representative_vectors)

    def decompose(self, vector: dict) -> tuple[list[Fraction], GradedVector]:
        """Class coordinates of the cycle part and the non-cycle remainder.

        The remainder is a combination over indices of the degree basis and
        is zero exactly for cycles.
        """
        coefficients = self._echelon.express(vector)
        if coefficients is None:
            raise ValueError(f"Vector outside degree {self.degree}")
        coords = [Fraction(0)] * self.dimension
        remainder = GradedVector()
        for (kind, index), value in coefficients.items():
            if kind == "rep":
                coords[index] = value
            elif kind == "comp":
                remainder.iadd_coef(index, value)
        return coords, remainder

    def coordinates(self, vector: dict) -> list[Fraction] | None:
        coords, remainder = self.decompose(vector)
        return None if remainder else coords

    def is_boundary(self, vector: dict) -> bool:
        coords = self.coordinates(vector)
        return coords is not None and not any(coords)

    def class_vector(self, vector: dict) -> GradedVector:
        """Class of a cycle as a vector over the class names."""
        coords = self.coordinates(vector)
        if coords is None:
            raise ValueError(f"Not a cycle in degree {self.degree}")
        return GradedVector(zip(self.names, coords), degree=self.degree)

    def __repr__(self):
        return f"HomologyBasis(degree={self.degree}, dimension={self.dimension})"
