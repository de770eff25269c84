import unittest
from fractions import Fraction

from whitehead_lib.exceptions import DocumentSyntaxError
from whitehead_lib.free_lie import LieExpr
from whitehead_lib.parsing import (
    parse_lie_expression,
    parse_linear_combination,
    parse_polynomial,
)


class TestLieGrammar(unittest.TestCase):
    def setUp(self):
        self.a = LieExpr.generator("a")
        self.b = LieExpr.generator("b")

    def test_bracket(self):
        self.assertEqual(parse_lie_expression("[a, b]"), LieExpr.bracket(self.a, self.b))

    def test_signed_scaled_sum(self):
        expr = parse_lie_expression("2*[a, b] - b")
        self.assertEqual(expr.render(), "2*[a, b] - b")
        self.assertEqual(parse_lie_expression("-1/2 [a, [a, b]]").render(), "-1/2*[a, [a, b]]")

    def test_parentheses_and_zero(self):
        self.assertEqual(parse_lie_expression("2*(a - b) + b"), self.a * 2 - self.b)
        self.assertTrue(parse_lie_expression("0").is_formally_zero())
        self.assertTrue(parse_lie_expression("a - a").is_formally_zero())

    def test_render_parses_back(self):
        for text in ("[v1, v234] - [v13, v24]", "-[a, a] + 3*b", "1/3*[x_1, [x_1, y]]"):
            self.assertEqual(parse_lie_expression(text).render(), text)

    def test_syntax_errors(self):
        for text in ("[a, b", "a +", "[a b]", "2.5*a", "1a2 +"):
            with self.assertRaises(DocumentSyntaxError):
                parse_lie_expression(text)

    def test_error_position(self):
        with self.assertRaises(DocumentSyntaxError) as context:
            parse_lie_expression("[a, b")
        self.assertEqual(context.exception.line, 1)

    def test_linear_combination(self):
        self.assertEqual(parse_linear_combination("z - 2*w"), {"z": 1, "w": -2})
        with self.assertRaises(DocumentSyntaxError):
            parse_linear_combination("[a, b]")


class TestPolynomialGrammar(unittest.TestCase):
    def test_monomials(self):
        terms = parse_polynomial("y^2 + x^2*y")
        self.assertEqual([t.word for t in terms], [("y", "y"), ("x", "x", "y")])
        self.assertEqual([t.coefficient for t in terms], [1, 1])

    def test_coefficients_and_constants(self):
        terms = parse_polynomial("-1/2*x*y + 3")
        self.assertEqual(terms[0].word, ("x", "y"))
        self.assertEqual(terms[0].coefficient, Fraction(-1, 2))
        self.assertEqual(terms[1].word, ())
        self.assertEqual(terms[1].coefficient, 3)

    def test_syntax_errors(self):
        for text in ("x^", "x**2", "+", "x y"):
            with self.assertRaises(DocumentSyntaxError):
                parse_polynomial(text)
