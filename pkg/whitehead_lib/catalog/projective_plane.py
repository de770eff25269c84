"""Quillen model of the complex projective plane: Lie(a, b), |a| = 1, |b| = 3, ∂b = [a, a].

The triple bracket [a, a, a] does not contain 0.
"""

from ..dgl import DGLPresentation
from ..free_lie import GeneratorSet, LieExpr

PROJECTIVE_PLANE_TRUNCATION = 5


def projective_plane_presentation(
    truncation: int = PROJECTIVE_PLANE_TRUNCATION,
) -> DGLPresentation:
    a = LieExpr.generator("a")
    return DGLPresentation(
        GeneratorSet([("a", 1), ("b", 3)], truncation),
        {"b": LieExpr.bracket(a, a)},
    )


def projective_plane_classes() -> list[LieExpr]:
    return [LieExpr.generator("a")] * 3
