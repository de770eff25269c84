import unittest
from fractions import Fraction

from whitehead_lib.catalog import collapse_structure
from whitehead_lib.exceptions import DegreeError
from whitehead_lib.linf import LInfStructure
from whitehead_lib.sullivan import (
    PairingTable,
    brackets_from_differential,
    differential_in_pairing,
    dualize,
    pairing_sign,
)


class TestPairing(unittest.TestCase):
    def test_pairing_sign(self):
        self.assertEqual(pairing_sign(7, [3, 3]), 1)
        self.assertEqual(pairing_sign(2, [1]), 1)
        self.assertEqual(pairing_sign(3, [1]), -1)
        self.assertEqual(pairing_sign(7, [3, 1, 1]), 1)

    def test_square_pairs_twice(self):
        pairing = PairingTable({"x": 2, "y": 4})
        self.assertEqual(pairing.pair(("y", "y"), ["y", "y"]), 2)
        self.assertEqual(pairing.pair(("x", "x", "y"), ["y", "x", "x"]), 2)
        self.assertEqual(pairing.pair(("x", "y"), ["y"]), 0)

    def test_custom_table(self):
        pairing = PairingTable({"v": 2}, {("v", "a"): 2, ("v", "b"): -1})
        self.assertEqual(pairing.value("v", {"a": 1, "b": 1}), 1)
        self.assertEqual(pairing.value("v", "c"), 0)


class TestDualize(unittest.TestCase):
    def setUp(self):
        self.structure = collapse_structure()
        self.algebra = dualize(self.structure)

    def test_generators_are_suspended(self):
        self.assertEqual(self.algebra.degrees, {"x": 2, "y": 4, "z": 7})

    def test_differential(self):
        expected = self.algebra.polynomial(
            {("y", "y"): Fraction(1, 2), ("x", "x", "y"): Fraction(1, 2)}
        )
        self.assertEqual(self.algebra.d("z"), expected)
        self.assertTrue(self.algebra.d("x").is_zero())
        self.assertTrue(self.algebra.is_minimal())
        self.assertTrue(self.algebra.check_d_squared())

    def test_pairing_recovers_brackets(self):
        self.assertEqual(differential_in_pairing(self.algebra, "z", ["y", "y"]), 1)
        self.assertEqual(differential_in_pairing(self.algebra, "z", ["y", "x", "x"]), 1)

    def test_distinct_arguments_keep_their_coefficient(self):
        structure = LInfStructure(
            [("x", 1), ("y", 3), ("w", 4)], {2: {("x", "y"): {"w": 1}}}
        )
        algebra = dualize(structure)
        self.assertEqual(abs(algebra.d("w").terms[("x", "y")]), 1)

    def test_round_trip(self):
        rebuilt = brackets_from_differential(self.algebra)
        self.assertEqual(rebuilt.degrees, {"x": 1, "y": 3, "z": 6})
        self.assertEqual(dict(rebuilt.bracket(("y", "y"))), {"z": 1})
        self.assertEqual(dict(rebuilt.bracket(("x", "x", "y"))), {"z": 1})
        self.assertTrue(rebuilt.same_tables(self.structure))

    def test_negative_degrees_are_refused(self):
        with self.assertRaises(DegreeError):
            dualize(LInfStructure([("x", -1)]))
