import logging
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from ..exceptions import DegreeError, UnknownGeneratorError
from ..graded import GradedVector, koszul_sort

_LOGGER = logging.getLogger(__name__)

Args = tuple[str, ...]


class SkewTables:
    """Multilinear tables on canonical argument tuples of a graded basis.

    Arguments are sorted by basis position; with ``antisymmetric`` the
    tables are graded skew-symmetric in the basis degrees, otherwise graded
    symmetric in the basis degrees shifted by ``shift``.
    """

    def __init__(
        self,
        basis: Iterable[tuple[str, int]],
        antisymmetric: bool,
        shift: int = 0,
    ):
        self.basis = [(name, int(degree)) for name, degree in basis]
        self.names = [name for name, _ in self.basis]
        self.degrees = dict(self.basis)
        if len(self.degrees) != len(self.basis):
            raise DegreeError("Basis names must be unique")
        self.position = {name: index for index, name in enumerate(self.names)}
        self.antisymmetric = antisymmetric
        self.shift = shift
        self.tables: dict[int, dict[Args, GradedVector]] = {}

    def _sign_degree(self, name: str) -> int:
        if name not in self.degrees:
            raise UnknownGeneratorError(name)
        return self.degrees[name] + self.shift

    def canonical(self, args: Sequence[str]) -> tuple[Args, int]:
        return koszul_sort(
            tuple(args),
            key=self.position.__getitem__,
            degree=self._sign_degree,
            antisymmetric=self.antisymmetric,
        )

    def table(self, arity: int) -> dict[Args, GradedVector]:
        return self.tables.get(arity, {})

    def arities(self) -> list[int]:
        return sorted(k for k, table in self.tables.items() if table)

    def _store(self, args: Sequence[str], value: Mapping[str, object]) -> None:
        key, sign = self.canonical(args)
        vector = GradedVector(value)
        for name in vector:
            if name not in self.degrees:
                raise UnknownGeneratorError(name)
        if sign == 0:
            if vector:
                raise DegreeError(
                    f"{tuple(args)} must vanish by graded symmetry, got a nonzero value"
                )
            return
        table = self.tables.setdefault(len(key), {})
        if vector:
            table[key] = vector * sign
        else:
            table.pop(key, None)

    def lookup(self, args: Sequence[str]) -> GradedVector:
        key, sign = self.canonical(args)
        if sign == 0:
            return GradedVector()
        value = self.tables.get(len(key), {}).get(key)
        if value is None:
            return GradedVector()
        return value * sign

    def evaluate(self, arguments: Sequence[dict]) -> GradedVector:
        """Multilinear extension to vectors over the basis."""
        result = GradedVector()
        if not self.tables.get(len(arguments)):
            return result
        for choice in product(*(list(v.items()) for v in arguments)):
            coef = 1
            for _, value in choice:
                coef *= value
            result.iadd_scaled(coef, self.lookup([key for key, _ in choice]))
        return result

    def canonical_tuples(self, arity: int, max_degree: int | None = None) -> list[Args]:
        """Canonical argument tuples not forced to vanish by symmetry."""
        found = []
        for combo in combinations_with_replacement(self.names, arity):
            key, sign = self.canonical(combo)
            if sign == 0 or key != combo:
                continue
            if max_degree is not None and sum(self.degrees[n] for n in combo) > max_degree:
                continue
            found.append(combo)
        return found

    def same_tables(self, other: "SkewTables") -> bool:
        arities = set(self.arities()) | set(other.arities())
        return all(self.table(k) == other.table(k) for k in arities)


class LInfStructure(SkewTables):
    """Brackets l_k of degree k-2 on a finite graded basis."""

    def __init__(
        self,
        basis: Iterable[tuple[str, int]],
        brackets: Mapping[int, Mapping[Sequence[str], Mapping[str, object]]] | None = None,
        arity_bound: int | None = None,
    ):
        super().__init__(basis, antisymmetric=True)
        self._arity_bound = arity_bound
        for arity, table in (brackets or {}).items():
            for args, value in table.items():
                self.set_bracket(args, value)

    @property
    def arity_bound(self) -> int:
        present = self.arities()
        bound = present[-1] if present else 0
        if self._arity_bound is not None:
            return max(bound, self._arity_bound)
        return bound

    def output_degree(self, args: Sequence[str]) -> int:
        return sum(self.degrees[name] for name in args) + len(args) - 2

    def set_bracket(self, args: Sequence[str], value: Mapping[str, object]) -> None:
        args = tuple(args)
        if not args:
            raise DegreeError("Brackets need at least one argument")
        expected = self.output_degree(args)
        for name in value:
            if name in self.degrees and self.degrees[name] != expected and value[name] != 0:
                raise DegreeError(
                    f"l_{len(args)}{args} must have degree {expected}, "
                    f"'{name}' has degree {self.degrees[name]}"
                )
        self._store(args, value)

    def bracket(self, args: Sequence[str]) -> GradedVector:
        return self.lookup(args)

    def is_minimal(self) -> bool:
        return not self.table(1)

    def is_reduced(self) -> bool:
        return all(degree > 0 for degree in self.degrees.values())

    def is_non_negative(self) -> bool:
        return all(degree >= 0 for degree in self.degrees.values())

    def __repr__(self):
        return f"LInfStructure(dim={len(self.names)}, arities={self.arities()})"
