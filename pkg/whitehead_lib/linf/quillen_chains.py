import logging

from ..dgl.DGLPresentation import DGLPresentation
from ..dgl.operations import check_d_squared
from ..exceptions import SignConventionError, TruncationError
from ..free_lie import LieExpr
from ..graded import GradedVector
from ..utils.linear_algebra import EchelonForm
from .Coderivation import Coderivation
from .correspondence import brackets_to_coderivation
from .LInfStructure import LInfStructure

_LOGGER = logging.getLogger(__name__)


class QuillenChains:
    """Quillen chains of a DGL on the suspended basis up to a total degree.

    Basis elements of L in degree n are named ``e<n>_<i>``; ``expressions``
    maps each name back to its Lie expression.
    """

    def __init__(
        self,
        structure: LInfStructure,
        coderivation: Coderivation,
        expressions: dict[str, LieExpr],
        max_degree: int,
    ):
        self.structure = structure
        self.coderivation = coderivation
        self.expressions = expressions
        self.max_degree = max_degree


def dgl_structure(presentation: DGLPresentation, max_degree: int) -> tuple[LInfStructure, dict]:
    """l_1 = d and l_2 = bracket on the basis of L in degrees < max_degree."""
    top = max_degree - 1
    if presentation.truncation < top:
        raise TruncationError(
            f"Chains up to degree {max_degree} need truncation >= {top}, "
            f"have {presentation.truncation}"
        )
    names: dict[int, list[str]] = {}
    vectors: dict[str, GradedVector] = {}
    expressions: dict[str, LieExpr] = {}
    echelons: dict[int, EchelonForm] = {}
    basis = []
    for degree in range(1, top + 1):
        echelon = EchelonForm()
        names[degree] = []
        for index, (expr, vector) in enumerate(presentation.basis(degree)):
            name = f"e{degree}_{index}"
            names[degree].append(name)
            vectors[name] = vector
            expressions[name] = expr
            echelon.add(vector, name)
            basis.append((name, degree))
        echelons[degree] = echelon

    def coordinates(vector: dict, degree: int) -> GradedVector:
        if not vector:
            return GradedVector()
        coords = echelons[degree].express(vector)
        if coords is None:
            raise ValueError(f"Vector outside the degree {degree} piece")
        return coords

    structure = LInfStructure(basis)
    for name, degree in basis:
        if degree > 1:
            image = presentation.vector_differential(vectors[name], degree)
            if image:
                structure.set_bracket((name,), coordinates(image, degree - 1))
    for args in structure.canonical_tuples(2, top):
        (a, b) = args
        da, db = structure.degrees[a], structure.degrees[b]
        value = presentation.vector_bracket(vectors[a], vectors[b], da, db)
        if value:
            structure.set_bracket(args, coordinates(value, da + db))
    _LOGGER.debug("DGL structure on %d basis elements up to degree %d", len(basis), top)
    return structure, expressions


def quillen_chains(presentation: DGLPresentation, max_degree: int) -> QuillenChains:
    if not check_d_squared(presentation):
        raise SignConventionError("Quillen chains need a presentation with d^2 = 0")
    structure, expressions = dgl_structure(presentation, max_degree)
    return QuillenChains(
        structure, brackets_to_coderivation(structure), expressions, max_degree
    )
