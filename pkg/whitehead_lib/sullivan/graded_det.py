import logging
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from ..exceptions import DegreeError
from ..graded import GradedPolynomial, koszul_sign, to_fraction
from ..utils.rationals import sympy_to_fraction
from .PairingTable import PairingTable

_LOGGER = logging.getLogger(__name__)

Matrix = Sequence[Sequence[object]]


def _square(matrix: Matrix, degrees: Sequence[int]) -> list[list[Fraction]]:
    rows = [[to_fraction(value) for value in row] for row in matrix]
    if any(len(row) != len(rows) for row in rows):
        raise DegreeError("The graded determinant needs a square matrix")
    if len(degrees) != len(rows):
        raise DegreeError(f"Expected {len(rows)} degrees, got {len(degrees)}")
    return rows


def graded_det(matrix: Matrix, degrees: Sequence[int]) -> Fraction:
    """Σ_σ ε_σ a_{1σ(1)} ... a_{rσ(r)}, ε_σ the Koszul sign of w_σ(1)...w_σ(r).

    With all degrees odd this is the determinant.
    """
    rows = _square(matrix, degrees)
    total = Fraction(0)
    for sigma in permutations(range(len(rows))):
        term = Fraction(1)
        for i, j in enumerate(sigma):
            term *= rows[i][j]
            if not term:
                break
        if term:
            total += koszul_sign(sigma, degrees) * term
    return total


def graded_det_by_expansion(matrix: Matrix, degrees: Sequence[int]) -> Fraction:
    """Coefficient of w_1...w_r in y_1...y_r with y_i = Σ_j a_ij w_j."""
    rows = _square(matrix, degrees)
    names = [f"w{j}" for j in range(len(rows))]
    degrees = dict(zip(names, degrees))
    product = GradedPolynomial(degrees, names).constant(1)
    for row in rows:
        terms = {(name,): value for name, value in zip(names, row)}
        product = product * GradedPolynomial(degrees, names, terms)
    return sympy_to_fraction(product.coefficient(names))


def rho(
    phi: GradedPolynomial,
    classes: Sequence[Mapping[str, object] | str],
    pairing: PairingTable,
    ignore_shorter: bool = False,
) -> Fraction:
    """Σ λ_w ρ̃(A_w) over the words w of length r = len(classes) in phi.

    Entries are a_pq = <w[p] ; sx_q>, graded by n_q = |sx_q|; longer words
    are ignored. Words shorter than r are refused unless ``ignore_shorter``.
    """
    r = len(classes)
    shorter = [word for word in phi.terms if len(word) < r]
    if shorter and not ignore_shorter:
        raise DegreeError(f"rho is defined on words of length >= {r}, found {shorter[0]}")
    degrees = [pairing.suspended_degree(x) for x in classes]
    total = Fraction(0)
    for word, coef in phi.terms.items():
        if len(word) != r:
            continue
        matrix = [[pairing.value(v, x) for x in classes] for v in word]
        total += sympy_to_fraction(coef) * graded_det(matrix, degrees)
    _LOGGER.debug("rho over basis order %s: %s", phi.order, total)
    return total
