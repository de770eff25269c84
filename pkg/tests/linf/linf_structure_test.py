import unittest

from whitehead_lib.exceptions import DegreeError, UnknownGeneratorError
from whitehead_lib.linf import LInfStructure, check_generalized_jacobi


def collapse_structure() -> LInfStructure:
    return LInfStructure(
        [("x", 1), ("y", 3), ("z", 6)],
        {2: {("y", "y"): {"z": 1}}, 3: {("y", "x", "x"): {"z": 1}}},
    )


def chain_complex_violation() -> LInfStructure:
    return LInfStructure(
        [("a", 2), ("b", 1), ("c", 0)],
        {1: {("a",): {"b": 1}, ("b",): {"c": 1}}},
    )


class TestLInfStructure(unittest.TestCase):
    def test_graded_antisymmetry(self):
        structure = LInfStructure([("x", 0), ("y", 0), ("z", 0)])
        structure.set_bracket(("y", "x"), {"z": 1})
        self.assertEqual(dict(structure.bracket(("x", "y"))), {"z": -1})
        self.assertEqual(dict(structure.bracket(("y", "x"))), {"z": 1})
        self.assertEqual(list(structure.table(2)), [("x", "y")])

    def test_odd_arguments_commute(self):
        structure = collapse_structure()
        self.assertEqual(dict(structure.bracket(("x", "y", "x"))), {"z": 1})
        self.assertEqual(dict(structure.bracket(("x", "x", "y"))), {"z": 1})

    def test_even_repeat_must_vanish(self):
        structure = LInfStructure([("x", 0), ("z", 0)])
        with self.assertRaises(DegreeError):
            structure.set_bracket(("x", "x"), {"z": 1})
        self.assertTrue(structure.bracket(("x", "x")).is_zero())

    def test_output_degree(self):
        structure = collapse_structure()
        self.assertEqual(structure.output_degree(("x", "x", "y")), 6)
        with self.assertRaises(DegreeError):
            structure.set_bracket(("x", "y"), {"z": 1})
        with self.assertRaises(DegreeError):
            structure.set_bracket((), {})

    def test_unknown_output(self):
        structure = collapse_structure()
        with self.assertRaises(UnknownGeneratorError):
            structure.set_bracket(("y", "y"), {"w": 1})

    def test_arities_and_bound(self):
        structure = collapse_structure()
        self.assertEqual(structure.arities(), [2, 3])
        self.assertEqual(structure.arity_bound, 3)
        bounded = LInfStructure([("x", 1)], arity_bound=5)
        self.assertEqual(bounded.arity_bound, 5)

    def test_predicates(self):
        self.assertTrue(collapse_structure().is_minimal())
        self.assertTrue(collapse_structure().is_reduced())
        violation = chain_complex_violation()
        self.assertFalse(violation.is_minimal())
        self.assertFalse(violation.is_reduced())
        self.assertTrue(violation.is_non_negative())

    def test_canonical_tuples(self):
        structure = LInfStructure([("x", 0), ("a", 1)])
        # (x, x) vanishes by symmetry, (a, a) does not
        self.assertEqual(structure.canonical_tuples(2), [("x", "a"), ("a", "a")])
        self.assertEqual(structure.canonical_tuples(2, max_degree=1), [("x", "a")])

    def test_same_tables(self):
        self.assertTrue(collapse_structure().same_tables(collapse_structure()))
        other = collapse_structure()
        other.set_bracket(("y", "y"), {"z": 2})
        self.assertFalse(collapse_structure().same_tables(other))

    def test_evaluate_is_multilinear(self):
        structure = collapse_structure()
        value = structure.evaluate([{"y": 2}, {"y": 3, "x": 1}])
        self.assertEqual(dict(value), {"z": 6})


class TestGeneralizedJacobi(unittest.TestCase):
    def test_central_brackets(self):
        report = check_generalized_jacobi(collapse_structure(), 5)
        self.assertTrue(report)
        self.assertEqual(report.verified_up_to, 5)

    def test_square_of_differential(self):
        report = check_generalized_jacobi(chain_complex_violation(), 3)
        self.assertFalse(report)
        self.assertEqual(report.verified_up_to, 0)
        self.assertEqual(report.violation_arity, 1)
        self.assertEqual(report.violation_args, ("a",))
        self.assertEqual(dict(report.violation_value), {"c": 1})

    def test_lie_algebra(self):
        # sl2 in degree 0: [h, e] = 2e, [h, f] = -2f, [e, f] = h
        structure = LInfStructure(
            [("e", 0), ("f", 0), ("h", 0)],
            {2: {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}}},
        )
        self.assertTrue(check_generalized_jacobi(structure, 3))

    def test_broken_lie_algebra(self):
        structure = LInfStructure(
            [("e", 0), ("f", 0), ("h", 0)],
            {2: {("h", "e"): {"e": 2}, ("h", "f"): {"f": 2}, ("e", "f"): {"h": 1}}},
        )
        report = check_generalized_jacobi(structure, 3)
        self.assertFalse(report)
        self.assertEqual(report.violation_arity, 3)
