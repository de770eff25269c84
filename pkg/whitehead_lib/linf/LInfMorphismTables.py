from typing import Mapping, Sequence

from ..exceptions import DegreeError, UnknownGeneratorError
from ..graded import GradedVector
from .LInfStructure import LInfStructure, SkewTables


class LInfMorphismTables(SkewTables):
    """Components f_n: source^n -> target of degree n-1, graded skew-symmetric."""

    def __init__(
        self,
        source: LInfStructure,
        target: LInfStructure,
        maps: Mapping[int, Mapping[Sequence[str], Mapping[str, object]]] | None = None,
    ):
        super().__init__(source.basis, antisymmetric=True)
        self.source = source
        self.target = target
        for arity, table in (maps or {}).items():
            for args, value in table.items():
                self.set_map(args, value)

    def set_map(self, args: Sequence[str], value: Mapping[str, object]) -> None:
        expected = sum(self.degrees[name] for name in args) + len(args) - 1
        for name, coef in value.items():
            if name not in self.target.degrees:
                raise UnknownGeneratorError(name)
            if coef != 0 and self.target.degrees[name] != expected:
                raise DegreeError(
                    f"f_{len(args)}{tuple(args)} must have degree {expected}"
                )
        key, sign = self.canonical(args)
        if sign == 0:
            if any(coef != 0 for coef in value.values()):
                raise DegreeError(f"f{tuple(args)} must vanish by skew-symmetry")
            return
        table = self.tables.setdefault(len(key), {})
        vector = GradedVector(value) * sign
        if vector:
            table[key] = vector
        else:
            table.pop(key, None)

    def component(self, args: Sequence[str]) -> GradedVector:
        return self.lookup(args)

    @classmethod
    def identity(cls, structure: LInfStructure, target: LInfStructure | None = None):
        return cls(
            structure,
            target or structure,
            {1: {(name,): {name: 1} for name in structure.names}},
        )
