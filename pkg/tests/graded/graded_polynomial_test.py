import unittest

import sympy

from whitehead_lib.exceptions import UnknownGeneratorError
from whitehead_lib.graded import GradedPolynomial


class TestGradedPolynomial(unittest.TestCase):
    def setUp(self):
        self.degrees = {"x": 2, "y": 4, "z": 7}
        self.order = ["x", "y", "z"]
        self.zero = GradedPolynomial(self.degrees, self.order)
        self.x = self.zero.generator("x")
        self.y = self.zero.generator("y")
        self.z = self.zero.generator("z")

    def test_render(self):
        value = self.y * self.y + self.y * self.x * self.x
        self.assertEqual(value.render(), "y^2 + x^2*y")
        self.assertEqual(value.degree(), 8)
        self.assertEqual(self.zero.render(), "0")
        self.assertEqual((self.x.scale(sympy.Rational(-1, 2))).render(), "-1/2*x")

    def test_odd_square_vanishes(self):
        self.assertTrue((self.z * self.z).is_zero())

    def test_odd_generators_anticommute(self):
        degrees = {"a": 1, "b": 1}
        zero = GradedPolynomial(degrees, ["a", "b"])
        product = zero.generator("b") * zero.generator("a")
        self.assertEqual(product.coefficient(("a", "b")), -1)
        self.assertEqual(product.coefficient(("b", "a")), 1)

    def test_symbolic_coefficients(self):
        a, b = sympy.symbols("a b")
        value = self.x.scale(a) * self.x.scale(b)
        self.assertEqual(value.coefficient(("x", "x")), a * b)
        self.assertEqual(value.free_symbols(), {a, b})

    def test_power_and_substitute(self):
        a = sympy.Symbol("a")
        square = self.x**2
        self.assertEqual(square.render(), "x^2")
        image = square.substitute({"x": self.x.scale(a) + self.y})
        self.assertEqual(image.coefficient(("x", "x")), a**2)
        self.assertEqual(image.coefficient(("x", "y")), 2 * a)
        self.assertEqual(image.coefficient(("y", "y")), 1)

    def test_derivation(self):
        dz = self.y * self.y + self.x * self.x * self.y
        product = self.x * self.z
        image = product.apply_derivation({"z": dz})
        expected = self.x * dz
        self.assertEqual(image, expected)

    def test_derivation_sign_past_odd_generator(self):
        degrees = {"a": 1, "b": 1, "c": 2}
        zero = GradedPolynomial(degrees, ["a", "b", "c"])
        ab = zero.generator("a") * zero.generator("b")
        image = ab.apply_derivation({"b": zero.generator("c")})
        self.assertEqual(image.coefficient(("a", "c")), -1)

    def test_word_length_part(self):
        value = self.y * self.y + self.x * self.x * self.y
        self.assertEqual(value.word_lengths(), {2, 3})
        self.assertEqual(value.word_length_part(2).render(), "y^2")

    def test_unknown_generator(self):
        with self.assertRaises(UnknownGeneratorError):
            self.zero.generator("w")
