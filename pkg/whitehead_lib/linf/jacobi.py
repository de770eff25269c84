import logging

from ..graded import GradedVector, koszul_sign, permutation_sign, shuffles
from .LInfStructure import Args, LInfStructure

_LOGGER = logging.getLogger(__name__)


class JacobiReport:
    """Result of a truncated check; ``verified_up_to`` is the last arity that passed."""

    def __init__(
        self,
        verified_up_to: int,
        passed: bool,
        violation_arity: int | None = None,
        violation_args: Args | None = None,
        violation_value: GradedVector | None = None,
    ):
        self.verified_up_to = verified_up_to
        self.passed = passed
        self.violation_arity = violation_arity
        self.violation_args = violation_args
        self.violation_value = violation_value

    def __bool__(self):
        return self.passed


def jacobiator(structure: LInfStructure, args: Args) -> GradedVector:
    """Left side of the n-ary generalized Jacobi identity on the given arguments."""
    n = len(args)
    degrees = [structure.degrees[name] for name in args]
    result = GradedVector()
    for i in range(1, n + 1):
        j = n + 1 - i
        if not structure.table(i) or not structure.table(j):
            continue
        outer_sign = -1 if (i * (j - 1)) & 1 else 1
        for sigma in shuffles(i, n - i):
            inner = structure.bracket([args[k] for k in sigma[:i]])
            if not inner:
                continue
            sign = outer_sign * koszul_sign(sigma, degrees) * permutation_sign(sigma)
            rest = [GradedVector({args[k]: 1}) for k in sigma[i:]]
            result.iadd_scaled(sign, structure.evaluate([inner] + rest))
    return result


def check_generalized_jacobi(
    structure: LInfStructure, up_to_n: int, max_degree: int | None = None
) -> JacobiReport:
    verified = 0
    for n in range(1, up_to_n + 1):
        for args in structure.canonical_tuples(n, max_degree):
            value = jacobiator(structure, args)
            if value:
                _LOGGER.debug("Jacobi identity fails for %s: %s", args, dict(value))
                return JacobiReport(verified, False, n, args, value)
        verified = n
    return JacobiReport(verified, True)
