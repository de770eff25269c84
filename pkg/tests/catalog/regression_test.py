import random
import unittest

from whitehead_lib.catalog import (
    expected_collapse_codifferential,
    random_central_structure,
    random_dgl,
    random_odd_dimensions,
    run_regression,
    subset_oracle,
)
from whitehead_lib.dgl import check_d_squared
from whitehead_lib.linf import check_generalized_jacobi
from whitehead_lib.sullivan import intrinsic_coformality


class TestRegression(unittest.TestCase):
    def test_cheap_criteria(self):
        results = run_regression([2, 4, 5, 8, 9], quick=True)
        self.assertEqual([r.number for r in results], [2, 4, 5, 8, 9])
        for result in results:
            self.assertTrue(result, f"{result.title}: {result.details}")

    def test_unknown_criterion(self):
        with self.assertRaises(ValueError):
            run_regression([11])

    def test_expected_codifferential(self):
        self.assertEqual(
            dict(expected_collapse_codifferential(2, 2)),
            {("x", "x", "z"): 1, ("y", "z"): 2},
        )
        self.assertFalse(expected_collapse_codifferential(1, 1))

    def assertCriterion(self, number: int) -> list[str]:
        (result,) = run_regression([number])
        self.assertEqual(result.number, number)
        self.assertTrue(result, f"{result.title}: {result.details}")
        return result.details

    def test_nine_cell(self):
        details = self.assertCriterion(1)
        self.assertIn("H_5 = <z>", details)
        self.assertIn("dim H_8 = 0", details)
        self.assertIn("verdict: not_formal_2", details)

    def test_collapse_codifferential(self):
        self.assertCriterion(3)

    def test_round_trips(self):
        self.assertCriterion(6)

    def test_quillen_signs(self):
        self.assertCriterion(7)

    def test_formal_collapse(self):
        self.assertCriterion(10)


class TestRandomCorpora(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(7)

    def test_random_dgl_squares_to_zero(self):
        for _ in range(5):
            self.assertTrue(check_d_squared(random_dgl(self.rng)))

    def test_central_structures_satisfy_jacobi(self):
        for _ in range(5):
            structure = random_central_structure(self.rng)
            self.assertTrue(check_generalized_jacobi(structure, 4))

    def test_subset_oracle(self):
        self.assertFalse(subset_oracle([3, 3, 3, 3, 11]))
        self.assertTrue(subset_oracle([3, 5, 7, 9, 13]))
        for _ in range(20):
            dimensions = random_odd_dimensions(self.rng)
            self.assertEqual(intrinsic_coformality(dimensions).coformal, subset_oracle(dimensions))
