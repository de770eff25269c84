import logging
from typing import Sequence

from ..dgl import DGLPresentation, HomologyLieAlgebra
from ..enums import Cardinality, FormalityVerdict, ZeroMembership
from ..exceptions import EmptyBracketSetError
from .BracketSet import BracketSet
from .classify import Classification, ClassifyConfig, classify
from .extension import ExtensionConfig, as_element, bracket_set

_LOGGER = logging.getLogger(__name__)


class FormalityReport:
    def __init__(
        self,
        verdict: FormalityVerdict,
        in_algebra: BracketSet,
        in_homology: BracketSet,
        algebra_classification: Classification,
        homology_classification: Classification,
    ):
        self.verdict = verdict
        self.in_algebra = in_algebra
        self.in_homology = in_homology
        self.algebra_classification = algebra_classification
        self.homology_classification = homology_classification

    @property
    def not_formal(self) -> bool:
        return self.verdict in (
            FormalityVerdict.NOT_FORMAL_ZERO_CRITERION,
            FormalityVerdict.NOT_FORMAL_CARDINALITY_CRITERION,
        )


def homology_bracket_set(
    target: DGLPresentation,
    classes: Sequence[object],
    config: ExtensionConfig = ExtensionConfig(),
) -> BracketSet:
    """The bracket set of the classes of the representatives, taken in H(T)."""
    elements = [as_element(target, value) for value in classes]
    degree = sum(element.degree for element in elements) + len(elements) - 2
    homology = HomologyLieAlgebra(target, degree)
    homology_classes = [
        homology.element_of_class(element.specialize({}), element.degree)
        for element in elements
    ]
    return bracket_set(homology, homology_classes, config)


def formality_obstruction(
    target: DGLPresentation,
    classes: Sequence[object],
    extension_config: ExtensionConfig = ExtensionConfig(),
    classify_config: ClassifyConfig = ClassifyConfig(),
) -> FormalityReport:
    """Compare the bracket set in the algebra with the one in its homology.

    Zero outside the set in the algebra, or sets of different cardinality
    class, rule out formality; otherwise the verdict is inconclusive.
    """
    elements = [as_element(target, value) for value in classes]
    in_algebra = bracket_set(target, elements, extension_config)
    if in_algebra.is_empty:
        raise EmptyBracketSetError("The bracket set is empty in the algebra")
    in_homology = homology_bracket_set(target, elements, extension_config)
    algebra_classification = classify(in_algebra, classify_config)
    homology_classification = classify(in_homology, classify_config)
    _LOGGER.debug(
        "Bracket sets: %s in the algebra, %s in homology",
        algebra_classification,
        homology_classification,
    )

    cardinalities = (
        algebra_classification.cardinality,
        homology_classification.cardinality,
    )
    if algebra_classification.zero_membership == ZeroMembership.NO:
        verdict = FormalityVerdict.NOT_FORMAL_ZERO_CRITERION
    elif Cardinality.UNDECIDED not in cardinalities and cardinalities[0] != cardinalities[1]:
        verdict = FormalityVerdict.NOT_FORMAL_CARDINALITY_CRITERION
    elif (
        Cardinality.UNDECIDED in cardinalities
        or algebra_classification.zero_membership == ZeroMembership.UNKNOWN
    ):
        verdict = FormalityVerdict.UNDECIDED
    else:
        verdict = FormalityVerdict.INCONCLUSIVE
    return FormalityReport(
        verdict, in_algebra, in_homology, algebra_classification, homology_classification
    )
