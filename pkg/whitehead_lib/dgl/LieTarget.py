import logging
from typing import Sequence

import sympy

from ..const import HOMOLOGY_CLASS_PREFIX
from ..exceptions import TruncationError
from ..graded import GradedVector
from ..utils.linear_algebra import EchelonForm, combine
from ..utils.rationals import to_sympy
from .HomologyBasis import HomologyBasis
from .ParamElement import ParamElement, bilinear, map_vectors

_LOGGER = logging.getLogger(__name__)

FRESH_HOMOLOGY = "homology"
FRESH_CYCLES = "cycles"


class PreimageResult:
    def __init__(
        self,
        preimage: ParamElement,
        fresh_parameters: list[str],
        constraints: list[sympy.Expr],
    ):
        self.preimage = preimage
        self.fresh_parameters = fresh_parameters
        self.constraints = constraints

    @property
    def unconditional(self) -> bool:
        return not self.constraints


class LieTarget:
    """Finite-type graded Lie algebra with differential, degree by degree.

    Subclasses provide the degree pieces, the differential and the bracket
    on vectors; parameterized operations, homology and boundary solving are
    shared.
    """

    def __init__(self, truncation: int):
        self.truncation = truncation
        self.logger = logging.getLogger(type(self).__module__)
        self._homology_cache: dict[int, HomologyBasis] = {}
        self._boundary_cache: dict[int, EchelonForm] = {}

    def piece(self, degree: int) -> list[GradedVector]:
        raise NotImplementedError

    def vector_differential(self, vector: dict, degree: int) -> GradedVector:
        raise NotImplementedError

    def vector_bracket(
        self, left: dict, right: dict, left_degree: int, right_degree: int
    ) -> GradedVector:
        raise NotImplementedError

    def describe(self, degree: int, combination: dict) -> object:
        """Human-facing form of the element sum(combination[j] * piece[j])."""
        raise NotImplementedError

    def check_degree(self, degree: int) -> None:
        if degree > self.truncation:
            raise TruncationError(
                f"Degree {degree} exceeds truncation {self.truncation}"
            )

    def bracket(self, left: ParamElement, right: ParamElement) -> ParamElement:
        degree = left.degree + right.degree
        self.check_degree(degree)
        return bilinear(
            left,
            right,
            lambda u, v: self.vector_bracket(u, v, left.degree, right.degree),
            degree,
        )

    def differential(self, element: ParamElement) -> ParamElement:
        return map_vectors(
            element,
            lambda v: self.vector_differential(v, element.degree),
            element.degree - 1,
        )

    def cycles(self, degree: int) -> list[GradedVector]:
        piece = self.piece(degree)
        return [
            GradedVector(combine(relation, piece), degree=degree)
            for relation in self._cycle_relations(degree)
        ]

    def _cycle_relations(self, degree: int) -> list[GradedVector]:
        return self._boundary_echelon(degree - 1).relations

    def homology(self, degree: int) -> HomologyBasis:
        cached = self._homology_cache.get(degree)
        if cached is not None:
            return cached
        if degree + 1 > self.truncation:
            raise TruncationError(
                f"Homology in degree {degree} needs truncation >= {degree + 1}, "
                f"have {self.truncation}"
            )
        piece = self.piece(degree)
        relations = self._cycle_relations(degree)
        cycles = [combine(relation, piece) for relation in relations]
        boundaries = [
            self.vector_differential(vector, degree + 1)
            for vector in self.piece(degree + 1)
        ]
        echelon = EchelonForm()
        for vector in boundaries:
            echelon.add(vector)
        chosen = [index for index, cycle in enumerate(cycles) if echelon.add(cycle)]
        names = [f"{HOMOLOGY_CLASS_PREFIX}{degree}_{i}" for i in range(len(chosen))]
        result = HomologyBasis(
            degree,
            names,
            [self.describe(degree, relations[index]) for index in chosen],
            [GradedVector(cycles[index], degree=degree) for index in chosen],
            boundaries,
            len(cycles),
            piece,
        )
        self.logger.debug(
            "H_%d: %d cycles, boundary rank %d, dimension %d",
            degree,
            len(cycles),
            result.boundary_rank,
            result.dimension,
        )
        self._homology_cache[degree] = result
        return result

    def _boundary_echelon(self, degree: int) -> EchelonForm:
        """Echelon form of the images of the degree+1 piece."""
        cached = self._boundary_cache.get(degree)
        if cached is None:
            cached = EchelonForm()
            for index, vector in enumerate(self.piece(degree + 1)):
                cached.add(self.vector_differential(vector, degree + 1), index)
            self._boundary_cache[degree] = cached
        return cached

    def fresh_vectors(self, degree: int, mode: str) -> list[GradedVector]:
        if mode == FRESH_HOMOLOGY:
            try:
                return self.homology(degree).representative_vectors
            except TruncationError:
                self.logger.warning(
                    "Homology in degree %d out of range, using all cycles", degree
                )
        return self.cycles(degree)

    def solve_boundary(
        self,
        target: ParamElement,
        prefix: str,
        fresh_parameters: str = FRESH_CYCLES,
    ) -> PreimageResult:
        """General solution of d(b) = target, with residual solvability constraints."""
        degree = target.degree
        self.check_degree(degree + 1)
        echelon = self._boundary_echelon(degree)
        source = self.piece(degree + 1)
        preimage = ParamElement(degree=degree + 1)
        residues: dict = {}
        for m, vector in target.terms.items():
            residual, coefficients = echelon.reduce(vector)
            preimage.add_vector(m, combine(coefficients, source))
            for key, value in residual.items():
                residues[key] = residues.get(key, 0) + to_sympy(value) * m
        constraints = [
            sympy.expand(value) for value in residues.values() if sympy.expand(value) != 0
        ]
        fresh = self.fresh_vectors(degree + 1, fresh_parameters)
        names = (
            [prefix]
            if len(fresh) == 1
            else [f"{prefix}__{j + 1}" for j in range(len(fresh))]
        )
        for name, vector in zip(names, fresh):
            preimage = preimage + ParamElement.parameter(name, vector, degree + 1)
        self.logger.debug(
            "Preimage in degree %d: %d fresh parameters, %d constraints",
            degree + 1,
            len(fresh),
            len(constraints),
        )
        return PreimageResult(preimage, names if fresh else [], constraints)

    def class_of(self, element: ParamElement) -> tuple[dict[str, sympy.Expr], list]:
        """Class coordinates (name -> polynomial) and the cycle conditions."""
        basis = self.homology(element.degree)
        coords: dict[str, sympy.Expr] = {name: sympy.Integer(0) for name in basis.names}
        remainders: dict = {}
        for m, vector in element.terms.items():
            values, remainder = basis.decompose(vector)
            for name, value in zip(basis.names, values):
                coords[name] += to_sympy(value) * m
            for index, value in remainder.items():
                remainders[index] = remainders.get(index, 0) + to_sympy(value) * m
        coords = {name: sympy.expand(value) for name, value in coords.items()}
        constraints = [
            sympy.expand(v) for v in remainders.values() if sympy.expand(v) != 0
        ]
        return coords, constraints
