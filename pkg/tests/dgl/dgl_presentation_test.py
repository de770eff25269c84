import unittest

from whitehead_lib.dgl import DGLPresentation, apply_differential, check_d_squared, homology
from whitehead_lib.exceptions import DegreeError, TruncationError, UnknownGeneratorError
from whitehead_lib.free_lie import GeneratorSet, LieExpr


def projective_plane(truncation: int = 5) -> DGLPresentation:
    a = LieExpr.generator("a")
    return DGLPresentation(
        GeneratorSet([("a", 1), ("b", 3)], truncation), {"b": LieExpr.bracket(a, a)}
    )


class TestDGLPresentation(unittest.TestCase):
    def setUp(self):
        self.presentation = projective_plane()
        self.a = LieExpr.generator("a")
        self.b = LieExpr.generator("b")

    def test_generator_differential(self):
        self.assertEqual(self.presentation.generator_differential("b").render(), "[a, a]")
        self.assertTrue(self.presentation.generator_differential("a").is_formally_zero())
        with self.assertRaises(UnknownGeneratorError):
            self.presentation.generator_differential("c")

    def test_degree_gate(self):
        with self.assertRaises(DegreeError):
            DGLPresentation(GeneratorSet([("a", 1), ("b", 3)], 5), {"b": self.a})

    def test_unknown_leaf(self):
        with self.assertRaises(UnknownGeneratorError):
            DGLPresentation(
                GeneratorSet([("a", 1), ("b", 3)], 5),
                {"b": LieExpr.bracket(self.a, LieExpr.generator("c"))},
            )

    def test_leibniz_rule(self):
        ab = LieExpr.bracket(self.a, self.b)
        image = apply_differential(self.presentation, ab)
        # d[a, b] = -[a, [a, a]], which vanishes in the free Lie algebra
        self.assertEqual(image.render(), "-[a, [a, a]]")
        self.assertTrue(self.presentation.expand(image).is_zero())

    def test_leibniz_rule_on_parameterized_elements(self):
        element = self.presentation.element(self.b)
        image = apply_differential(self.presentation, element)
        self.assertEqual(image.degree, 2)
        self.assertEqual(
            dict(image.specialize({})),
            dict(self.presentation.expand(LieExpr.bracket(self.a, self.a))),
        )

    def test_truncation_gate(self):
        presentation = projective_plane(truncation=3)
        deep = LieExpr.bracket(self.a, self.b)
        with self.assertRaises(TruncationError):
            apply_differential(presentation, deep)


class TestCheckDSquared(unittest.TestCase):
    def test_projective_plane(self):
        report = check_d_squared(projective_plane())
        self.assertTrue(report)
        self.assertIsNone(report.failing_generator)

    def test_failure_names_generator(self):
        presentation = DGLPresentation(
            GeneratorSet([("a", 1), ("b", 2), ("c", 3)], 3),
            {"b": LieExpr.generator("a"), "c": LieExpr.generator("b")},
        )
        report = check_d_squared(presentation)
        self.assertFalse(report)
        self.assertEqual(report.failing_generator, "c")
        self.assertEqual(dict(report.residual), {("a",): 1})


class TestHomology(unittest.TestCase):
    def setUp(self):
        self.presentation = projective_plane()

    def test_dimensions(self):
        dimensions = [homology(self.presentation, n).dimension for n in range(1, 5)]
        self.assertEqual(dimensions, [1, 0, 0, 1])

    def test_triple_bracket_class(self):
        basis = homology(self.presentation, 4)
        self.assertEqual(basis.names, ["H4_0"])
        self.assertEqual(basis.representatives[0].render(), "[a, b]")
        self.assertEqual(basis.cycle_dimension, 1)
        self.assertEqual(basis.boundary_rank, 0)

    def test_boundary(self):
        basis = homology(self.presentation, 2)
        aa = self.presentation.expand(LieExpr.bracket(LieExpr.generator("a"), LieExpr.generator("a")))
        self.assertTrue(basis.is_boundary(aa))
        self.assertEqual(basis.boundary_rank, 1)

    def test_needs_next_degree(self):
        with self.assertRaises(TruncationError):
            homology(self.presentation, 5)

    def test_class_of(self):
        element = self.presentation.element(
            LieExpr.bracket(LieExpr.generator("a"), LieExpr.generator("b"))
        )
        coords, constraints = self.presentation.class_of(element)
        self.assertEqual(coords, {"H4_0": 1})
        self.assertEqual(constraints, [])
