"""Brackets l_k and coderivation components h_k determine each other.

h_k(sx_1,...,sx_k) = -(-1)^{k(k-1)/2 + sum_i (k-i)|sx_i|} s l_k(x_1,...,x_k);
the global minus sign gives h_1 = -s d and h_2(sx,sy) = -(-1)^{|x|} s[x,y].
"""

from typing import Mapping, Sequence

from .Coderivation import Coderivation
from .LInfStructure import LInfStructure


def decalage_sign(degrees: Sequence[int]) -> int:
    """Sign relating l_k and h_k on arguments of the given (unsuspended) degrees."""
    k = len(degrees)
    exponent = k * (k - 1) // 2
    for i, degree in enumerate(degrees, start=1):
        exponent += (k - i) * (degree + 1)
    return 1 if exponent & 1 else -1


def _sign_for(args: Sequence[str], degrees: Mapping[str, int]) -> int:
    return decalage_sign([degrees[name] for name in args])


def brackets_to_coderivation(structure: LInfStructure) -> Coderivation:
    coderivation = Coderivation(structure.basis)
    for arity in structure.arities():
        for args, value in structure.table(arity).items():
            coderivation.set_component(args, value * _sign_for(args, structure.degrees))
    return coderivation


def coderivation_to_brackets(coderivation: Coderivation) -> LInfStructure:
    structure = LInfStructure(coderivation.basis)
    for arity in coderivation.arities():
        for args, value in coderivation.table(arity).items():
            structure.set_bracket(args, value * _sign_for(args, coderivation.degrees))
    return structure
