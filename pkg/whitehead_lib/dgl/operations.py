import logging

from ..exceptions import NotABoundaryError, NotACycleError
from ..free_lie import LieExpr
from ..free_lie.LieExpr import Tree, tree_degree
from ..graded import GradedVector
from .DGLPresentation import DGLPresentation
from .HomologyBasis import HomologyBasis
from .LieTarget import FRESH_CYCLES, PreimageResult
from .ParamElement import ParamElement

_LOGGER = logging.getLogger(__name__)


def _tree_differential(presentation: DGLPresentation, tree: Tree) -> LieExpr:
    if isinstance(tree, str):
        return presentation.generator_differential(tree)
    left, right = tree
    sign = -1 if tree_degree(left, presentation.degrees) & 1 else 1
    return LieExpr.bracket(
        _tree_differential(presentation, left), LieExpr({right: 1})
    ) + LieExpr.bracket(LieExpr({left: 1}), _tree_differential(presentation, right)) * sign


def apply_differential(
    presentation: DGLPresentation, element: LieExpr | ParamElement
) -> LieExpr | ParamElement:
    """Extend the differential by the Leibniz rule."""
    if isinstance(element, ParamElement):
        presentation.check_degree(element.degree)
        return presentation.differential(element)
    degree = element.degree(presentation.degrees)
    if degree is not None:
        presentation.check_degree(degree)
    result = LieExpr.zero()
    for tree, coef in element.terms.items():
        result = result + _tree_differential(presentation, tree) * coef
    return result


class DSquaredReport:
    def __init__(self, passed: bool, failing_generator: str | None = None, residual=None):
        self.passed = passed
        self.failing_generator = failing_generator
        self.residual = residual or GradedVector()

    def __bool__(self):
        return self.passed


def check_d_squared(presentation: DGLPresentation) -> DSquaredReport:
    for name in presentation.generators.names:
        degree = presentation.degrees[name]
        if degree > presentation.truncation:
            continue
        once = presentation.vector_differential(
            presentation.expand(LieExpr.generator(name)), degree
        )
        twice = presentation.vector_differential(once, degree - 1)
        if twice:
            _LOGGER.debug("d^2(%s) = %s", name, dict(twice))
            return DSquaredReport(False, name, twice)
    return DSquaredReport(True)


def homology(presentation: DGLPresentation, degree: int) -> HomologyBasis:
    return presentation.homology(degree)


def boundary_preimage(
    presentation: DGLPresentation,
    cycle: ParamElement,
    prefix: str = "lam",
    fresh_parameters: str = FRESH_CYCLES,
) -> PreimageResult:
    """All b with d(b) = cycle: a particular solution plus fresh parameters.

    Raises NotABoundaryError when no specialization of the parameters makes
    the cycle a boundary because the obstruction sits in its parameter-free
    part; otherwise parameter-dependent obstructions come back as constraints.
    """
    if not presentation.differential(cycle).is_zero():
        raise NotACycleError(f"Element of degree {cycle.degree} is not a cycle")
    result = presentation.solve_boundary(cycle, prefix, fresh_parameters)
    if any(c.is_number for c in result.constraints):
        raise NotABoundaryError(
            f"Degree {cycle.degree} cycle is not a boundary"
        )
    return result
