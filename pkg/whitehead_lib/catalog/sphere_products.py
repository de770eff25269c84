"""Fat wedges of spheres: the Whitehead model is its own target.

With the classes of u_1..u_k the bracket set is the nonzero class of the
attaching cycle, while in homology it is {0}.
"""

from typing import Sequence

from ..free_lie import LieExpr
from ..whitehead import WhiteheadModel, build_model


def fat_wedge(dimensions: Sequence[int]) -> WhiteheadModel:
    return build_model(dimensions)


def fat_wedge_classes(model: WhiteheadModel) -> list[LieExpr]:
    return [LieExpr.generator(model.name((i,))) for i in range(1, model.k + 1)]
