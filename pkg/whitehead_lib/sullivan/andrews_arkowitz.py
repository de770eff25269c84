import logging
from fractions import Fraction
from typing import Mapping, Sequence

from ..exceptions import DegreeError, PreconditionError, UnknownGeneratorError
from ..linf import LInfStructure
from .dualize import dualize, pairing_sign
from .graded_det import rho
from .PairingTable import PairingTable, as_element
from .SullivanAlgebraPresentation import SullivanAlgebraPresentation

_LOGGER = logging.getLogger(__name__)

Element = Mapping[str, object] | str


class AndrewsArkowitzReport:
    """Both sides of <v ; sx> = ε <v ; s l_r(x_1..x_r)> = (-1)^α ρ(dv).

    ``lhs`` pairs v with the bracket-set member, ``bracket_side`` with the
    r-th bracket of the classes and ``classical_side`` is the ρ form.
    """

    def __init__(
        self,
        generator: str,
        order: Sequence[str],
        lhs: Fraction,
        bracket_side: Fraction,
        classical_side: Fraction,
        bracket_sign: int,
        classical_sign: int,
        rho_value: Fraction,
        pairing_value: Fraction,
        precondition_met: bool,
    ):
        self.generator = generator
        self.order = tuple(order)
        self.lhs = lhs
        self.bracket_side = bracket_side
        self.classical_side = classical_side
        self.bracket_sign = bracket_sign
        self.classical_sign = classical_sign
        self.rho_value = rho_value
        self.pairing_value = pairing_value
        self.precondition_met = precondition_met

    @property
    def holds(self) -> bool:
        return self.lhs == self.bracket_side

    @property
    def classical_holds(self) -> bool:
        return self.lhs == self.classical_side

    @property
    def signs_agree(self) -> bool:
        return self.bracket_side == self.classical_side

    @property
    def pairing_agrees(self) -> bool:
        """The r-th part of dv paired with the classes equals its ρ value."""
        return self.pairing_value == self.rho_value

    def __bool__(self):
        return self.holds


def classical_sign(degrees: Sequence[int]) -> int:
    alpha = 0
    for i, a in enumerate(degrees):
        for b in degrees[i + 1 :]:
            alpha += a * b
    return -1 if alpha & 1 else 1


def andrews_arkowitz_check(
    structure: LInfStructure,
    generator: str,
    classes: Sequence[Element],
    member: Element,
    algebra: SullivanAlgebraPresentation | None = None,
    require_precondition: bool = True,
) -> AndrewsArkowitzReport:
    """Compare a bracket-set member with the differential of the dual algebra."""
    algebra = algebra or dualize(structure)
    if generator not in algebra.degrees:
        raise UnknownGeneratorError(generator)
    pairing = PairingTable(algebra.degrees)
    r = len(classes)
    degrees = [pairing.suspended_degree(x) for x in classes]
    if algebra.degrees[generator] != sum(degrees) - 1:
        raise DegreeError(
            f"'{generator}' has degree {algebra.degrees[generator]}, "
            f"expected {sum(degrees) - 1}"
        )
    dv = algebra.d(generator)
    precondition_met = all(length >= r for length in dv.word_lengths())
    if not precondition_met:
        if require_precondition:
            raise PreconditionError(
                f"d({generator}) has words shorter than {r}; "
                "the equality then depends on the chosen retract"
            )
        _LOGGER.warning(
            "d(%s) has words shorter than %d, comparing both sides anyway", generator, r
        )
    lhs = pairing.value(generator, as_element(member))
    vectors = [as_element(x) for x in classes]
    bracket = structure.evaluate(vectors)
    l_degrees = [degree - 1 for degree in degrees]
    bracket_sign = pairing_sign(algebra.degrees[generator], l_degrees)
    bracket_side = bracket_sign * pairing.value(generator, bracket)
    rho_value = rho(dv, classes, pairing, ignore_shorter=True)
    alpha_sign = classical_sign(degrees)
    pairing_value = pairing.pair_polynomial(dv.word_length_part(r).terms, classes)
    report = AndrewsArkowitzReport(
        generator,
        algebra.order,
        lhs,
        bracket_side,
        alpha_sign * rho_value,
        bracket_sign,
        alpha_sign,
        rho_value,
        pairing_value,
        precondition_met,
    )
    if not report.signs_agree:
        _LOGGER.warning(
            "Bracket and classical forms differ for %s: %s vs %s",
            generator,
            report.bracket_side,
            report.classical_side,
        )
    return report
