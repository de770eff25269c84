"""Dualization of L-infinity structures to free commutative dgas.

V = (sL)^# has one generator per basis element of L, with the same name and
degree |x| + 1. The k-th part of the differential is fixed by

    <d_k v ; sx_1 ∧ ... ∧ sx_k> = ε <v ; s l_k(x_1, ..., x_k)>,
    ε = (-1)^(|v| + Σ_{j<k} (k-j)|x_j|).
"""

import logging
from fractions import Fraction
from typing import Sequence

from ..exceptions import DegreeError
from ..graded import SUSPEND, DESUSPEND
from ..linf import LInfStructure
from ..utils.rationals import sympy_to_fraction, to_sympy
from .PairingTable import PairingTable
from .SullivanAlgebraPresentation import SullivanAlgebraPresentation

_LOGGER = logging.getLogger(__name__)


def pairing_sign(generator_degree: int, arguments_degrees: Sequence[int]) -> int:
    k = len(arguments_degrees)
    exponent = generator_degree
    for j, degree in enumerate(arguments_degrees[:-1], start=1):
        exponent += (k - j) * degree
    return -1 if exponent & 1 else 1


def dual_generators(structure: LInfStructure) -> list[tuple[str, int]]:
    if not structure.is_non_negative():
        raise DegreeError("Only non-negatively graded structures can be dualized")
    return [(name, SUSPEND.degree(degree)) for name, degree in structure.basis]


def dualize(
    structure: LInfStructure, order: Sequence[str] | None = None
) -> SullivanAlgebraPresentation:
    """The commutative dga (ΛV, d) dual to the Quillen chains of the structure.

    Each bracket value is divided by the pairing of its word with its
    arguments. A repeated argument pairs to the number of its orderings, so
    l_2(y, y) = l_3(y, x, x) = z gives dz = 1/2 y^2 + 1/2 x^2 y, while a
    bracket of distinct arguments keeps its coefficient up to sign.
    """
    generators = dual_generators(structure)
    algebra = SullivanAlgebraPresentation(generators, order=order)
    pairing = PairingTable(algebra.degrees)
    differential = {name: algebra.zero() for name in algebra.degrees}
    for arity in structure.arities():
        for args, value in structure.table(arity).items():
            word = algebra.zero().add_word(args)
            if word.is_zero():
                continue
            (monomial,) = word.terms
            norm = pairing.pair(monomial, args)
            if not norm:
                raise DegreeError(f"The word {monomial} pairs to zero with its arguments")
            arg_degrees = [structure.degrees[name] for name in args]
            for target, coef in value.items():
                epsilon = pairing_sign(algebra.degrees[target], arg_degrees)
                differential[target].add_word(monomial, to_sympy(epsilon * coef / norm))
    for name, value in differential.items():
        if not value.is_zero():
            algebra.set_differential(name, value)
    _LOGGER.debug("Dualized %r: %s", structure, algebra.render())
    return algebra


def brackets_from_differential(algebra: SullivanAlgebraPresentation) -> LInfStructure:
    """Inverse of dualize: read the brackets l_k back off d_k."""
    basis = []
    for name in algebra.order:
        degree = DESUSPEND.degree(algebra.degrees[name])
        if degree < 0:
            raise DegreeError(f"Generator '{name}' has degree {algebra.degrees[name]} < 1")
        basis.append((name, degree))
    structure = LInfStructure(basis)
    pairing = PairingTable(algebra.degrees)
    values: dict[tuple[str, ...], dict[str, Fraction]] = {}
    for target in algebra.order:
        for monomial, coef in algebra.d(target).terms.items():
            if not monomial:
                raise DegreeError(f"d({target}) has a constant term")
            arg_degrees = [structure.degrees[name] for name in monomial]
            epsilon = pairing_sign(algebra.degrees[target], arg_degrees)
            value = epsilon * sympy_to_fraction(coef) * pairing.pair(monomial, monomial)
            values.setdefault(monomial, {})[target] = value
    for args, value in values.items():
        structure.set_bracket(args, value)
    return structure


def differential_in_pairing(
    algebra: SullivanAlgebraPresentation,
    generator: str,
    elements: Sequence,
    pairing: PairingTable | None = None,
) -> Fraction:
    """<d_k v ; sx_1 ∧ ... ∧ sx_k> for k = len(elements)."""
    pairing = pairing or PairingTable(algebra.degrees)
    part = algebra.word_length_part(generator, len(elements))
    return pairing.pair_polynomial(part.terms, elements)
