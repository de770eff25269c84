import unittest

import sympy

from whitehead_lib.utils import ConstraintSystem


class TestConstraintSystem(unittest.TestCase):
    def setUp(self):
        self.x, self.y = sympy.symbols("x y")

    def test_zero_constraints_are_dropped(self):
        system = ConstraintSystem([self.x - self.x, 0])
        self.assertEqual(len(system), 0)
        self.assertTrue(system.eliminate().complete)

    def test_chained_substitution(self):
        system = ConstraintSystem([self.x - 2 * self.y, self.y - 1])
        elimination = system.eliminate()
        self.assertTrue(elimination.complete)
        self.assertEqual(elimination.apply(self.x + self.y), 3)
        self.assertEqual(elimination.eliminated(), {"x", "y"})

    def test_inconsistent(self):
        elimination = ConstraintSystem([self.x - 1, self.x - 2]).eliminate()
        self.assertFalse(elimination.consistent)
        self.assertFalse(elimination.complete)

    def test_nonlinear_residual(self):
        system = ConstraintSystem()
        system.add(self.x**2 + self.y**2)
        elimination = system.eliminate()
        self.assertTrue(elimination.consistent)
        self.assertEqual(elimination.residual, [self.x**2 + self.y**2])
        self.assertFalse(elimination.complete)

    def test_symbolic_coefficient_is_not_solved(self):
        elimination = ConstraintSystem([self.x * self.y - 1]).eliminate()
        self.assertEqual(len(elimination.residual), 1)
