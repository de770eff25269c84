from ..exceptions import TruncationError
from ..graded import GradedVector
from .HomologyBasis import HomologyBasis
from .LieTarget import LieTarget
from .ParamElement import ParamElement


class HomologyLieAlgebra(LieTarget):
    """H(T) as a Lie algebra with zero differential, on a basis of classes.

    Brackets are computed on cycle representatives in T and read back as
    class coordinates.
    """

    def __init__(self, source: LieTarget, max_degree: int | None = None):
        if max_degree is None:
            max_degree = source.truncation - 1
        if max_degree + 1 > source.truncation:
            raise TruncationError(
                f"Homology up to degree {max_degree} needs truncation >= {max_degree + 1}"
            )
        super().__init__(max_degree)
        self.source = source
        self._bracket_cache: dict[tuple[str, str], GradedVector] = {}

    def source_homology(self, degree: int) -> HomologyBasis:
        self.check_degree(degree)
        return self.source.homology(degree)

    def piece(self, degree: int) -> list[GradedVector]:
        if degree > self.truncation:
            return []
        return [
            GradedVector({name: 1}, degree=degree)
            for name in self.source_homology(degree).names
        ]

    def vector_differential(self, vector: dict, degree: int) -> GradedVector:
        return GradedVector(degree=degree - 1)

    def _class_bracket(self, a: str, b: str, da: int, db: int) -> GradedVector:
        key = (a, b)
        cached = self._bracket_cache.get(key)
        if cached is None:
            left = self.source_homology(da)
            right = self.source_homology(db)
            raw = self.source.vector_bracket(
                left.representative_vectors[left.names.index(a)],
                right.representative_vectors[right.names.index(b)],
                da,
                db,
            )
            cached = self.source_homology(da + db).class_vector(raw)
            self._bracket_cache[key] = cached
        return cached

    def vector_bracket(self, left, right, left_degree, right_degree) -> GradedVector:
        self.check_degree(left_degree + right_degree)
        result = GradedVector(degree=left_degree + right_degree)
        for a, ca in left.items():
            for b, cb in right.items():
                result.iadd_scaled(ca * cb, self._class_bracket(a, b, left_degree, right_degree))
        return result

    def homology(self, degree: int) -> HomologyBasis:
        cached = self._homology_cache.get(degree)
        if cached is None:
            piece = self.piece(degree)
            names = [next(iter(vector)) for vector in piece]
            cached = HomologyBasis(degree, names, names, piece, [], len(piece), piece)
            self._homology_cache[degree] = cached
        return cached

    def describe(self, degree: int, combination: dict) -> GradedVector:
        names = self.source_homology(degree).names
        return GradedVector(
            ((names[index], coef) for index, coef in combination.items()), degree=degree
        )

    def element_of_class(self, source_vector: dict, degree: int) -> ParamElement:
        """Class of a source cycle as an element of this algebra."""
        return ParamElement.constant(
            self.source_homology(degree).class_vector(source_vector), degree
        )
