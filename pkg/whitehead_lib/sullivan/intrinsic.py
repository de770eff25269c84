import logging
from itertools import combinations
from typing import Sequence

from ..exceptions import DegreeError
from ..linf import LInfStructure

_LOGGER = logging.getLogger(__name__)

Witness = tuple[int, tuple[int, ...]]


class IntrinsicCoformalityReport:
    """Verdict for a product of odd spheres or of even Eilenberg-Mac Lane spaces.

    Indices in the witness are 1-based: n_i = Σ_{j in subset} n_j - 1.
    """

    def __init__(
        self,
        coformal: bool,
        dimensions: Sequence[int],
        eilenberg_mac_lane: bool = False,
        witness: Witness | None = None,
    ):
        self.coformal = coformal
        self.dimensions = tuple(dimensions)
        self.eilenberg_mac_lane = eilenberg_mac_lane
        self.witness = witness

    def describe_witness(self) -> str | None:
        if self.witness is None:
            return None
        i, subset = self.witness
        terms = "+".join(str(self.dimensions[j - 1]) for j in subset)
        return f"n{i} = {terms}-1"

    def __bool__(self):
        return self.coformal


def degree_relations(dimensions: Sequence[int]) -> list[Witness]:
    """All (i, J) with J of even size r >= 4, i not in J, n_i = Σ_J n_j - 1."""
    k = len(dimensions)
    found = []
    for i in range(k):
        others = [j for j in range(k) if j != i]
        for r in range(4, len(others) + 1, 2):
            for subset in combinations(others, r):
                if dimensions[i] == sum(dimensions[j] for j in subset) - 1:
                    found.append((i + 1, tuple(j + 1 for j in subset)))
    return found


def intrinsic_coformality(
    dimensions: Sequence[int], eilenberg_mac_lane: bool = False
) -> IntrinsicCoformalityReport:
    dimensions = [int(n) for n in dimensions]
    if eilenberg_mac_lane:
        odd = [n for n in dimensions if n % 2 or n < 2]
        if odd:
            raise DegreeError(f"Eilenberg-Mac Lane factors must be even and >= 2, got {odd[0]}")
        return IntrinsicCoformalityReport(True, dimensions, eilenberg_mac_lane=True)
    bad = [n for n in dimensions if n % 2 == 0 or n < 3]
    if bad:
        raise DegreeError(f"Sphere dimensions must be odd and >= 3, got {bad[0]}")
    if len(dimensions) <= 4:
        return IntrinsicCoformalityReport(True, dimensions)
    relations = degree_relations(dimensions)
    if relations:
        _LOGGER.debug("Degree relations for %s: %s", dimensions, relations)
        return IntrinsicCoformalityReport(False, dimensions, witness=relations[0])
    return IntrinsicCoformalityReport(True, dimensions)


def exotic_structure(dimensions: Sequence[int], witness: Witness) -> LInfStructure:
    """The structure on x_1..x_k (|x_i| = n_i - 1) whose only bracket is l_r(x_J) = x_i."""
    i, subset = witness
    basis = [(f"x{j + 1}", n - 1) for j, n in enumerate(dimensions)]
    structure = LInfStructure(basis)
    structure.set_bracket([f"x{j}" for j in subset], {f"x{i}": 1})
    return structure
