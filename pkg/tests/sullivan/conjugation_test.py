import unittest

import sympy

from whitehead_lib.catalog import FAMILY_SYMBOLS, collapse_algebra, collapse_family
from whitehead_lib.enums import SolverVerdict
from whitehead_lib.exceptions import NonInvertibleFamilyError
from whitehead_lib.sullivan import (
    AutomorphismFamily,
    SullivanAlgebraPresentation,
    conjugated_differential,
    quadratic_obstruction,
    strip_nonvanishing,
)


class TestAutomorphismFamily(unittest.TestCase):
    def setUp(self):
        self.algebra = collapse_algebra()

    def test_inverse(self):
        family = AutomorphismFamily(
            self.algebra, {"y": self.algebra.polynomial({("y",): 1, ("x", "x"): 1})}
        )
        y = self.algebra.generator("y")
        self.assertEqual(
            family.inverse_images()["y"],
            self.algebra.polynomial({("y",): 1, ("x", "x"): -1}),
        )
        self.assertEqual(family.apply_inverse(family.apply(y)), y)

    def test_diagonal_must_not_vanish(self):
        a = sympy.Symbol("a")
        with self.assertRaises(NonInvertibleFamilyError):
            AutomorphismFamily(self.algebra, {"x": self.algebra.generator("x", a)})
        family = AutomorphismFamily(
            self.algebra, {"x": self.algebra.generator("x", a)}, nonvanishing=[a]
        )
        self.assertEqual(family.symbols(), {a})

    def test_images_follow_the_order(self):
        algebra = SullivanAlgebraPresentation([("u", 2), ("w", 2)])
        with self.assertRaises(NonInvertibleFamilyError):
            AutomorphismFamily(algebra, {"u": algebra.polynomial({("u",): 1, ("w",): 1})})


class TestQuadraticObstruction(unittest.TestCase):
    def setUp(self):
        self.algebra = collapse_algebra()
        self.family = collapse_family(self.algebra)
        self.differential = conjugated_differential(self.algebra, self.family)

    def test_conjugated_differential(self):
        a, b, c, e = FAMILY_SYMBOLS
        dz = self.differential["z"]
        self.assertEqual(sympy.simplify(dz.coefficient(("y", "y")) - b**2 / e), 0)
        self.assertEqual(
            sympy.simplify(dz.coefficient(("x", "x", "y")) - b * (2 * c + a**2) / e), 0
        )
        self.assertEqual(
            sympy.simplify(dz.coefficient(("x", "x", "x", "x")) - c * (c + a**2) / e), 0
        )
        self.assertTrue(self.differential["x"].is_zero())

    def test_strip_nonvanishing(self):
        a, b, c, e = FAMILY_SYMBOLS
        stripped = strip_nonvanishing(b * (2 * c + a**2) / e, {a, b, e})
        self.assertEqual(stripped, sympy.expand(2 * c + a**2))

    def test_no_quadratic_member(self):
        report = quadratic_obstruction(self.differential, self.family)
        self.assertEqual(report.verdict, SolverVerdict.NO_SOLUTION)
        self.assertFalse(report.quadratic_in_family)

    def test_quadratic_member_exists(self):
        algebra = SullivanAlgebraPresentation([("x", 2), ("y", 4), ("z", 7)])
        algebra.set_differential(
            "z", algebra.polynomial({("y", "y"): 1, ("x", "x", "y"): 2, ("x", "x", "x", "x"): 1})
        )
        b, c = sympy.symbols("b c")
        family = AutomorphismFamily(
            algebra,
            {"y": algebra.polynomial({("y",): b, ("x", "x"): c})},
            nonvanishing=[b],
        )
        # dz = (y + x^2)^2
        report = quadratic_obstruction(conjugated_differential(algebra, family), family)
        self.assertEqual(report.verdict, SolverVerdict.SOLVABLE)
        self.assertTrue(report.quadratic_in_family)
        self.assertEqual(report.witness[c], -1)
