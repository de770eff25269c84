import logging

from ..graded import GradedVector
from ..utils.linear_algebra import EchelonForm
from .GeneratorSet import GeneratorSet
from .LieExpr import LieExpr, Tree
from .tensor import expand_tree, tensor_bracket

_LOGGER = logging.getLogger(__name__)


def _piece(
    generators: GeneratorSet, weight: int, degree: int
) -> list[tuple[Tree, GradedVector]]:
    key = (weight, degree)
    cached = generators._piece_cache.get(key)
    if cached is not None:
        return cached
    if weight == 1:
        piece = [
            (name, expand_tree(name, generators.degrees))
            for name, gen_degree in generators.generators
            if gen_degree == degree
        ]
    else:
        # brackets [g, b] with b running over the previous weight span the piece
        echelon = EchelonForm()
        piece = []
        for name, gen_degree in generators.generators:
            if generators.is_positive() and weight - 1 > generators.max_weight(
                degree - gen_degree
            ):
                continue
            head = expand_tree(name, generators.degrees)
            for tree, vector in _piece(generators, weight - 1, degree - gen_degree):
                candidate = tensor_bracket(head, vector, gen_degree, degree - gen_degree)
                if candidate and echelon.add(candidate):
                    piece.append(((name, tree), candidate))
    generators._piece_cache[key] = piece
    _LOGGER.debug("Lie piece weight %d degree %d has dimension %d", weight, degree, len(piece))
    return piece


def graded_piece_basis(
    generators: GeneratorSet, weight: int, degree: int
) -> list[LieExpr]:
    """Basis of the weight/degree piece of the free Lie algebra."""
    if weight < 1:
        raise ValueError("Weight must be at least 1")
    generators.check_degree(degree)
    return [LieExpr({tree: 1}) for tree, _ in _piece(generators, weight, degree)]


def degree_basis(
    generators: GeneratorSet, degree: int
) -> list[tuple[LieExpr, GradedVector]]:
    """Basis of the whole degree piece (all weights) with tensor expansions."""
    generators.check_degree(degree)
    if not generators.generators:
        return []
    result = []
    for weight in range(1, generators.max_weight(degree) + 1):
        for tree, vector in _piece(generators, weight, degree):
            result.append((LieExpr({tree: 1}), vector))
    return result
