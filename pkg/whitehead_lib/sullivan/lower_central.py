"""Lower central series of an L-infinity structure and the Sullivan condition.

Γ^1 = L and Γ^k is spanned by the brackets l_m(y_1, ..., y_m), m >= 2, with
y_i in Γ^(k_i) and k_1 + ... + k_m >= k, closed under l_1.
"""

import logging
from itertools import combinations_with_replacement, product
from typing import Sequence

from ..exceptions import DegreeError
from ..graded import GradedVector
from ..linf import LInfStructure
from ..linf.morphisms import compositions
from ..utils.linear_algebra import EchelonForm, Subquotient, rank

_LOGGER = logging.getLogger(__name__)

Level = dict[int, list[GradedVector]]


def _span(vectors_by_degree: dict[int, list[GradedVector]]) -> Level:
    level = {}
    for degree, vectors in vectors_by_degree.items():
        echelon = EchelonForm()
        basis = [GradedVector(v, degree) for v in vectors if echelon.add(v)]
        if basis:
            level[degree] = basis
    return level


def _dimension(level: Level) -> int:
    return sum(len(vectors) for vectors in level.values())


def _flatten(level: Level) -> list[GradedVector]:
    return [v for degree in sorted(level) for v in level[degree]]


class LowerCentralSeries:
    def __init__(self, structure: LInfStructure, max_steps: int | None = None):
        if not structure.is_non_negative():
            raise DegreeError("The lower central series needs a non-negatively graded structure")
        self.structure = structure
        dimension = len(structure.names)
        self.max_steps = max_steps or dimension + structure.arity_bound + 2
        first: dict[int, list[GradedVector]] = {}
        for name, degree in structure.basis:
            first.setdefault(degree, []).append(GradedVector({name: 1}, degree))
        self.levels: list[Level] = [{}, _span(first)]
        self.nilpotent = False
        self.stable = False
        self._grow()

    def _bracket_span(self, k: int) -> dict[int, list[GradedVector]]:
        spans: dict[int, list[GradedVector]] = {}
        for arity in self.structure.arities():
            if arity < 2:
                continue
            for parts in compositions(max(k, arity), arity):
                pools = [_flatten(self.levels[part]) for part in parts]
                for choice in product(*pools):
                    value = self.structure.evaluate(list(choice))
                    if value:
                        degree = sum(v.degree for v in choice) + arity - 2
                        spans.setdefault(degree, []).append(value)
        return spans

    def _close_under_differential(self, spans: dict[int, list[GradedVector]]) -> Level:
        if not self.structure.table(1):
            return _span(spans)
        pending = [v for vectors in spans.values() for v in vectors]
        seen: dict[int, EchelonForm] = {}
        collected: dict[int, list[GradedVector]] = {}
        while pending:
            vector = pending.pop()
            degree = next(self.structure.degrees[name] for name in vector)
            echelon = seen.setdefault(degree, EchelonForm())
            if not echelon.add(vector):
                continue
            collected.setdefault(degree, []).append(vector)
            image = self.structure.evaluate([vector])
            if image:
                pending.append(image)
        return _span(collected)

    def _grow(self) -> None:
        window = self.structure.arity_bound + 1
        while len(self.levels) <= self.max_steps:
            k = len(self.levels)
            level = self._close_under_differential(self._bracket_span(k))
            self.levels.append(level)
            _LOGGER.debug("Γ^%d has dimension %d", k, _dimension(level))
            if not level:
                self.nilpotent = True
                return
            recent = [_dimension(self.levels[j]) for j in range(max(1, k - window + 1), k + 1)]
            if len(recent) == window and len(set(recent)) == 1:
                self.stable = True
                return

    def dimensions(self) -> list[int]:
        return [_dimension(level) for level in self.levels[1:]]

    def level(self, k: int) -> Level:
        if k < 1:
            raise DegreeError("The lower central series starts at Γ^1")
        if k >= len(self.levels):
            return {} if self.nilpotent else self.levels[-1]
        return self.levels[k]

    def witness_degree(self) -> int | None:
        if self.nilpotent:
            return None
        return min(self.levels[-1])

    def ordered_basis(self) -> list[GradedVector] | None:
        """Complements of Γ^(k+1) in Γ^k, by level, degree descending within a level."""
        if not self.nilpotent:
            return None
        basis: list[GradedVector] = []
        for k in range(1, len(self.levels) - 1):
            upper = self.levels[k]
            lower = self.levels[k + 1]
            for degree in sorted(upper, reverse=True):
                quotient = Subquotient(upper[degree], lower.get(degree, []))
                basis.extend(GradedVector(v, degree) for v in quotient.representatives)
        return basis


class SullivanReport:
    def __init__(
        self,
        is_sullivan: bool,
        series_dimensions: Sequence[int],
        ordered_basis: list[GradedVector] | None = None,
        witness_degree: int | None = None,
    ):
        self.is_sullivan = is_sullivan
        self.series_dimensions = list(series_dimensions)
        self.ordered_basis = ordered_basis
        self.witness_degree = witness_degree

    def __bool__(self):
        return self.is_sullivan


def is_sullivan(structure: LInfStructure, max_steps: int | None = None) -> SullivanReport:
    """Degree-wise nilpotence of the structure, with an ordered basis when it holds."""
    series = LowerCentralSeries(structure, max_steps)
    if series.nilpotent:
        return SullivanReport(True, series.dimensions(), series.ordered_basis())
    if not series.stable:
        _LOGGER.warning(
            "Lower central series still shrinking after %d steps", series.max_steps
        )
    return SullivanReport(False, series.dimensions(), witness_degree=series.witness_degree())


def check_ordered_basis(structure: LInfStructure, basis: Sequence[dict]) -> bool:
    """Every l_k(x_i1..x_ik) lies in the span of the x_i with i > max(i1..ik)."""
    basis = [GradedVector(v) for v in basis]
    if len(basis) != len(structure.names) or rank(basis) != len(basis):
        return False
    for top in range(len(basis)):
        later = EchelonForm()
        for vector in basis[top + 1 :]:
            later.add(vector)
        for arity in structure.arities():
            for rest in combinations_with_replacement(range(top + 1), arity - 1):
                value = structure.evaluate([basis[i] for i in rest] + [basis[top]])
                if value and not later.contains(value):
                    _LOGGER.debug("l_%d on indices %s leaves the later span", arity, rest + (top,))
                    return False
    return True

