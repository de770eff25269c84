"""The product of four 3-spheres wedged with a 6-sphere, plus three 9-cells.

The cells are attached along the Whitehead products of the 6-sphere with the
second, third and fourth 3-sphere. The Quillen minimal model has 19
generators. The classes of v1..v4 give all multiples of [z, z] as bracket
set, while in homology the same classes give {0}: there [v1, z] survives in
H_7, which forces the parameters of u23, u24 and u34 to vanish.
"""

from ..dgl import DGLPresentation
from ..free_lie import GeneratorSet, LieExpr
from ..whitehead.model import boundary_expression, generator_name, index_words

NINE_CELL_DIMENSIONS = (3, 3, 3, 3)
# w has degree 12 - 2 = 10 and H_10 only needs the degree 11 piece
NINE_CELL_TRUNCATION = 11
NINE_CELL_CLASSES = ("v1", "v2", "v3", "v4")


def _name(word) -> str:
    return generator_name(word, len(NINE_CELL_DIMENSIONS), prefix="v")


def nine_cell_presentation(truncation: int = NINE_CELL_TRUNCATION) -> DGLPresentation:
    dimensions = NINE_CELL_DIMENSIONS
    words = index_words(len(dimensions), proper=False)
    generators = [(_name(word), sum(dimensions[i - 1] for i in word) - 1) for word in words]
    generators += [("z", 5), ("a", 8), ("b", 8), ("c", 8)]
    differential = {
        _name(word): boundary_expression(word, dimensions, _name)
        for word in words
        if len(word) > 1
    }
    z = LieExpr.generator("z")
    for cell, sphere in (("a", "v2"), ("b", "v3"), ("c", "v4")):
        differential[cell] = LieExpr.bracket(z, LieExpr.generator(sphere))
    return DGLPresentation(GeneratorSet(generators, truncation), differential)


def nine_cell_classes() -> list[LieExpr]:
    return [LieExpr.generator(name) for name in NINE_CELL_CLASSES]
