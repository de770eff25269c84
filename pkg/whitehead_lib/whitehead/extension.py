"""Stage-wise extension of the classes x_1..x_k over the model of their bracket."""

import logging
from typing import Sequence

from ..const import PARAMETER_PREFIX
from ..dgl import DGLPresentation, LieTarget, ParamElement
from ..dgl.LieTarget import FRESH_CYCLES, FRESH_HOMOLOGY
from ..exceptions import DegreeError, NotACycleError, SignConventionError
from ..free_lie import LieExpr
from ..graded import GradedVector
from ..utils.constraints import ConstraintSystem
from .BracketSet import BracketSet, StageChoice
from .model import IndexWord, WhiteheadModel, build_model

_LOGGER = logging.getLogger(__name__)


class ExtensionConfig:
    def __init__(self, fresh_parameters: str = FRESH_HOMOLOGY, check_cycles: bool = True):
        if fresh_parameters not in (FRESH_HOMOLOGY, FRESH_CYCLES):
            raise ValueError(f"Unknown fresh parameter mode '{fresh_parameters}'")
        self.fresh_parameters = fresh_parameters
        self.check_cycles = check_cycles


def parameter_prefix(word: IndexWord) -> str:
    return PARAMETER_PREFIX + "_" + "_".join(str(i) for i in word)


def as_element(target: LieTarget, value) -> ParamElement:
    """A class representative given as ParamElement, LieExpr or graded vector."""
    if isinstance(value, ParamElement):
        return value
    if isinstance(value, LieExpr):
        if not isinstance(target, DGLPresentation):
            raise TypeError("Lie expressions need a presentation as target")
        return target.element(value)
    if isinstance(value, GradedVector) and value.degree is not None:
        return ParamElement.constant(value, value.degree)
    raise TypeError(f"Cannot read {value!r} as a homogeneous element")


def _image_of_boundary(
    target: LieTarget,
    model: WhiteheadModel,
    word: IndexWord,
    images: dict[IndexWord, ParamElement],
) -> ParamElement:
    result = ParamElement(degree=model.degree(word) - 1)
    for sign, first, second in model.boundary_terms(word):
        result = result + target.bracket(images[first], images[second]).scale(sign)
    return result


def _check_cycle(
    target: LieTarget, element: ParamElement, system: ConstraintSystem, name: str
) -> None:
    boundary = target.differential(element)
    if boundary.is_zero():
        return
    elimination = system.eliminate()
    leftover = [
        elimination.apply(value)
        for value in boundary.coordinate_polynomials().values()
    ]
    if not any(value != 0 for value in leftover):
        return
    if elimination.complete:
        raise SignConventionError(
            f"The image of d({name}) is not a cycle"
        )
    _LOGGER.warning(
        "Cycle condition at stage %s depends on unresolved constraints", name
    )


def bracket_set(
    target: LieTarget,
    classes: Sequence[object],
    config: ExtensionConfig = ExtensionConfig(),
) -> BracketSet:
    """The set [x_1, ..., x_k] as a parameterized homology class.

    The representatives are extended over the model one generator at a time,
    shortest index words first; each lift is a particular preimage plus
    fresh parameters times a basis of homology (or cycles) in its degree.
    """
    elements = [as_element(target, value) for value in classes]
    for index, element in enumerate(elements, start=1):
        if element.degree is None or element.degree < 1:
            raise DegreeError(f"Class {index} needs a positive degree")
        if not target.differential(element).is_zero():
            raise NotACycleError(f"Representative {index} is not a cycle")
    model = build_model([element.degree + 1 for element in elements])
    target.homology(model.cycle_degree)

    images: dict[IndexWord, ParamElement] = {
        (i,): element for i, element in enumerate(elements, start=1)
    }
    system = ConstraintSystem()
    parameters: list[str] = []
    provenance: list[StageChoice] = []
    for word in model.words():
        if len(word) == 1:
            continue
        cycle = _image_of_boundary(target, model, word, images)
        if config.check_cycles:
            _check_cycle(target, cycle, system, model.name(word))
        solution = target.solve_boundary(
            cycle, parameter_prefix(word), config.fresh_parameters
        )
        images[word] = solution.preimage
        parameters.extend(solution.fresh_parameters)
        system.extend(solution.constraints)
        provenance.append(
            StageChoice(
                model.name(word),
                model.degree(word),
                solution.fresh_parameters,
                solution.constraints,
            )
        )
        _LOGGER.debug(
            "Stage %s: %d fresh parameters, %d constraints",
            model.name(word),
            len(solution.fresh_parameters),
            len(solution.constraints),
        )
        if any(c.is_number for c in solution.constraints):
            _LOGGER.debug("Stage %s has no lift", model.name(word))
            return BracketSet.empty(model.cycle_degree, parameters, provenance)

    value = ParamElement(degree=model.cycle_degree)
    for sign, first, second in model.attaching_terms():
        value = value + target.bracket(images[first], images[second]).scale(sign)
    coordinates, cycle_conditions = target.class_of(value)
    system.extend(cycle_conditions)
    elimination = system.eliminate()
    if not elimination.consistent:
        _LOGGER.debug("Lifting constraints are inconsistent, the set is empty")
        return BracketSet.empty(model.cycle_degree, parameters, provenance)
    coordinates = {name: elimination.apply(expr) for name, expr in coordinates.items()}
    if elimination.residual:
        _LOGGER.warning(
            "%d lifting constraints could not be eliminated", len(elimination.residual)
        )
    return BracketSet(model.cycle_degree, coordinates, parameters, elimination, provenance)
