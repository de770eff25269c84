"""A space whose Quillen spectral sequence collapses at E^2 but which is not coformal.

On homology the L-infinity structure is l_2(y, y) = l_3(y, x, x) = z with
|x| = 1, |y| = 3, |z| = 6. Its Sullivan model is Λ(x, y, z), |x| = 2,
|y| = 4, |z| = 7, dz = y^2 + y x^2, and no automorphism
f(x) = ax, f(y) = by + cx^2, f(z) = ez makes the differential quadratic.
"""

import sympy

from ..linf import LInfStructure
from ..sullivan import AutomorphismFamily, SullivanAlgebraPresentation

FAMILY_SYMBOLS = sympy.symbols("a b c e")


def collapse_structure() -> LInfStructure:
    return LInfStructure(
        [("x", 1), ("y", 3), ("z", 6)],
        {2: {("y", "y"): {"z": 1}}, 3: {("y", "x", "x"): {"z": 1}}},
    )


def collapse_algebra() -> SullivanAlgebraPresentation:
    algebra = SullivanAlgebraPresentation([("x", 2), ("y", 4), ("z", 7)])
    algebra.set_differential(
        "z", algebra.polynomial({("y", "y"): 1, ("x", "x", "y"): 1})
    )
    return algebra


def collapse_family(algebra: SullivanAlgebraPresentation | None = None) -> AutomorphismFamily:
    algebra = algebra or collapse_algebra()
    a, b, c, e = FAMILY_SYMBOLS
    return AutomorphismFamily(
        algebra,
        {
            "x": algebra.generator("x", a),
            "y": algebra.polynomial({("y",): b, ("x", "x"): c}),
            "z": algebra.generator("z", e),
        },
        nonvanishing=(a, b, e),
    )
