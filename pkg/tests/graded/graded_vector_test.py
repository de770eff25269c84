import unittest
from fractions import Fraction

from whitehead_lib.exceptions import DegreeError
from whitehead_lib.graded import DESUSPEND, SUSPEND, GradedVector, Suspension, linear_combination


class TestGradedVector(unittest.TestCase):
    def test_zero_coefficients_are_dropped(self):
        vector = GradedVector({"a": 1, "b": 0}, degree=3)
        self.assertEqual(dict(vector), {"a": Fraction(1)})
        vector.iadd_coef("a", -1)
        self.assertTrue(vector.is_zero())
        self.assertEqual(vector, 0)

    def test_missing_key_reads_zero(self):
        self.assertEqual(GradedVector()["missing"], 0)

    def test_arithmetic(self):
        a = GradedVector({"x": 1, "y": 2}, degree=2)
        b = GradedVector({"y": -2, "z": Fraction(1, 2)}, degree=2)
        total = a + b
        self.assertEqual(dict(total), {"x": 1, "z": Fraction(1, 2)})
        self.assertEqual(total.degree, 2)
        self.assertEqual(dict(a - a), {})
        self.assertEqual(dict(a * 3), {"x": 3, "y": 6})
        self.assertEqual(dict(-a), {"x": -1, "y": -2})

    def test_mixed_degrees(self):
        total = GradedVector({"x": 1}, degree=2) + GradedVector({"y": 1}, degree=3)
        self.assertIsNone(total.degree)

    def test_rejects_floats(self):
        with self.assertRaises(TypeError):
            GradedVector({"x": 0.5})

    def test_linear_combination(self):
        result = linear_combination(
            [(2, {"x": 1}), (Fraction(-1, 2), {"x": 4, "y": 2})], degree=1
        )
        self.assertEqual(dict(result), {"y": -1})

    def test_map_keys_and_restrict(self):
        vector = GradedVector({("a",): 1, ("b",): 2})
        mapped = vector.map_keys(lambda key: "c")
        self.assertEqual(dict(mapped), {"c": 3})
        self.assertEqual(dict(vector.restrict(lambda key: key == ("b",))), {("b",): 2})


class TestSuspension(unittest.TestCase):
    def test_degree_shift(self):
        self.assertEqual(SUSPEND.degree(3), 4)
        self.assertEqual(DESUSPEND.degree(3), 2)
        self.assertEqual(SUSPEND.inverse(), DESUSPEND)

    def test_vector(self):
        vector = SUSPEND.vector(GradedVector({"x": 1}, degree=2))
        self.assertEqual(vector.degree, 3)
        self.assertEqual(dict(vector), {"x": 1})

    def test_bad_shift(self):
        with self.assertRaises(DegreeError):
            Suspension(2)
