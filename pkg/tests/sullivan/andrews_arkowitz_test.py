import unittest

from whitehead_lib.catalog import collapse_structure
from whitehead_lib.exceptions import DegreeError, PreconditionError
from whitehead_lib.sullivan import andrews_arkowitz_check, classical_sign


class TestAndrewsArkowitz(unittest.TestCase):
    def setUp(self):
        self.structure = collapse_structure()

    def test_classical_sign(self):
        self.assertEqual(classical_sign([4, 2, 2]), 1)
        self.assertEqual(classical_sign([3, 5]), -1)
        self.assertEqual(classical_sign([3, 4, 5]), -1)

    def test_triple_bracket(self):
        report = andrews_arkowitz_check(
            self.structure, "z", ["y", "x", "x"], "z", require_precondition=False
        )
        self.assertFalse(report.precondition_met)
        self.assertEqual(report.lhs, 1)
        self.assertEqual(report.bracket_side, 1)
        self.assertEqual(report.classical_side, 1)
        self.assertTrue(report)
        self.assertTrue(report.signs_agree)
        self.assertTrue(report.pairing_agrees)

    def test_binary_bracket(self):
        report = andrews_arkowitz_check(self.structure, "z", ["y", "y"], "z")
        self.assertTrue(report.precondition_met)
        self.assertTrue(report.holds)
        self.assertEqual(report.rho_value, 1)

    def test_wrong_member(self):
        report = andrews_arkowitz_check(self.structure, "z", ["y", "y"], {"z": 2})
        self.assertFalse(report.holds)
        self.assertTrue(report.signs_agree)

    def test_precondition(self):
        with self.assertRaises(PreconditionError):
            andrews_arkowitz_check(self.structure, "z", ["y", "x", "x"], "z")

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeError):
            andrews_arkowitz_check(self.structure, "y", ["y", "x", "x"], "z")
