from fractions import Fraction
from typing import Iterator, Mapping, Union

from ..exceptions import DegreeError, UnknownGeneratorError
from ..graded.GradedVector import to_fraction
from ..utils.rationals import format_rational

# A bracket tree is a generator name or a pair of trees.
Tree = Union[str, tuple]


def tree_degree(tree: Tree, degrees: Mapping[str, int]) -> int:
    if isinstance(tree, str):
        if tree not in degrees:
            raise UnknownGeneratorError(tree)
        return degrees[tree]
    return tree_degree(tree[0], degrees) + tree_degree(tree[1], degrees)


def tree_weight(tree: Tree) -> int:
    if isinstance(tree, str):
        return 1
    return tree_weight(tree[0]) + tree_weight(tree[1])


def tree_leaves(tree: Tree) -> Iterator[str]:
    if isinstance(tree, str):
        yield tree
    else:
        yield from tree_leaves(tree[0])
        yield from tree_leaves(tree[1])


def render_tree(tree: Tree) -> str:
    if isinstance(tree, str):
        return tree
    return f"[{render_tree(tree[0])}, {render_tree(tree[1])}]"


class LieExpr:
    """Formal rational combination of bracket trees over generator names."""

    def __init__(self, terms: Mapping[Tree, object] | None = None):
        self.terms: dict[Tree, Fraction] = {}
        for tree, coef in (terms or {}).items():
            self._add_term(tree, coef)

    def _add_term(self, tree: Tree, coef) -> None:
        total = self.terms.get(tree, 0) + to_fraction(coef)
        if total == 0:
            self.terms.pop(tree, None)
        else:
            self.terms[tree] = total

    @classmethod
    def generator(cls, name: str, coef=1) -> "LieExpr":
        return cls({name: coef})

    @classmethod
    def zero(cls) -> "LieExpr":
        return cls()

    @classmethod
    def bracket(cls, left: "LieExpr", right: "LieExpr") -> "LieExpr":
        result = cls()
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                result._add_term((a, b), ca * cb)
        return result

    def __add__(self, other: "LieExpr") -> "LieExpr":
        result = LieExpr(self.terms)
        for tree, coef in other.terms.items():
            result._add_term(tree, coef)
        return result

    def __sub__(self, other: "LieExpr") -> "LieExpr":
        return self + other * -1

    def __neg__(self) -> "LieExpr":
        return self * -1

    def __mul__(self, scalar) -> "LieExpr":
        scalar = to_fraction(scalar)
        return LieExpr({tree: coef * scalar for tree, coef in self.terms.items()})

    __rmul__ = __mul__

    def is_formally_zero(self) -> bool:
        return not self.terms

    def leaves(self) -> set[str]:
        names: set[str] = set()
        for tree in self.terms:
            names.update(tree_leaves(tree))
        return names

    def degree(self, degrees: Mapping[str, int]) -> int | None:
        """Common degree of all trees; None for the empty sum."""
        found = {tree_degree(tree, degrees) for tree in self.terms}
        if len(found) > 1:
            raise DegreeError(f"Inhomogeneous expression {self.render()}")
        return found.pop() if found else None

    def render(self) -> str:
        if not self.terms:
            return "0"
        text = ""
        for tree, coef in self.terms.items():
            body = render_tree(tree)
            magnitude = abs(coef)
            piece = body if magnitude == 1 else f"{format_rational(magnitude)}*{body}"
            if not text:
                text = piece if coef > 0 else f"-{piece}"
            else:
                text += f" + {piece}" if coef > 0 else f" - {piece}"
        return text

    def __eq__(self, other):
        if not isinstance(other, LieExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"LieExpr({self.render()})"
