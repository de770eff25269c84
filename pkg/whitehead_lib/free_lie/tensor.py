"""Embedding of the free graded Lie algebra into the tensor algebra.

Tensor words are tuples of generator names; [a,b] = a(x)b - (-1)^{|a||b|} b(x)a.
"""

from typing import Mapping

from ..graded import GradedVector
from .GeneratorSet import GeneratorSet
from .LieExpr import LieExpr, Tree, tree_degree

Word = tuple[str, ...]


def word_degree(word: Word, degrees: Mapping[str, int]) -> int:
    return sum(degrees[name] for name in word)


def tensor_bracket(
    left: dict, right: dict, left_degree: int, right_degree: int
) -> GradedVector:
    result = GradedVector(degree=left_degree + right_degree)
    if not left or not right:
        return result
    swap = -1 if (left_degree * right_degree) & 1 else 1
    for a, ca in left.items():
        for b, cb in right.items():
            product = ca * cb
            result.iadd_coef(a + b, product)
            result.iadd_coef(b + a, -swap * product)
    return result


def expand_tree(tree: Tree, degrees: Mapping[str, int]) -> GradedVector:
    if isinstance(tree, str):
        return GradedVector({(tree,): 1}, degree=degrees[tree])
    left = expand_tree(tree[0], degrees)
    right = expand_tree(tree[1], degrees)
    return tensor_bracket(
        left, right, tree_degree(tree[0], degrees), tree_degree(tree[1], degrees)
    )


def expand_to_tensor(expr: LieExpr, generators: GeneratorSet) -> GradedVector:
    """Canonical tensor form of a Lie expression over the generator set."""
    degree = expr.degree(generators.degrees)
    result = GradedVector(degree=degree)
    if degree is None:
        return result
    generators.check_degree(degree)
    for tree, coef in expr.terms.items():
        result.iadd_scaled(coef, expand_tree(tree, generators.degrees))
    return result
