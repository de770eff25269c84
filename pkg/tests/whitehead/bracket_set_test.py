import unittest
from fractions import Fraction

from whitehead_lib.catalog import (
    fat_wedge,
    fat_wedge_classes,
    projective_plane_classes,
    projective_plane_presentation,
)
from whitehead_lib.dgl import DGLPresentation
from whitehead_lib.enums import Cardinality, ZeroMembership
from whitehead_lib.exceptions import NotACycleError
from whitehead_lib.free_lie import GeneratorSet, LieExpr
from whitehead_lib.whitehead import ExtensionConfig, bracket_set, classify


class TestBracketSet(unittest.TestCase):
    def test_projective_plane(self):
        result = bracket_set(projective_plane_presentation(), projective_plane_classes())
        self.assertFalse(result.is_empty)
        self.assertEqual(result.degree, 4)
        self.assertTrue(result.is_constant())
        self.assertEqual(result.value_at({}), {"H4_0": Fraction(-3)})
        self.assertEqual(result.render(), {"H4_0": "-3"})
        self.assertEqual([stage.generator for stage in result.provenance], ["u12", "u13", "u23"])

    def test_cycle_parameters(self):
        config = ExtensionConfig(fresh_parameters="cycles")
        result = bracket_set(projective_plane_presentation(), projective_plane_classes(), config)
        self.assertEqual(result.parameters, [])
        self.assertEqual(result.value_at({}), {"H4_0": Fraction(-3)})

    def test_unknown_parameter_mode(self):
        with self.assertRaises(ValueError):
            ExtensionConfig(fresh_parameters="boundaries")

    def test_representatives_must_be_cycles(self):
        a, b = LieExpr.generator("a"), LieExpr.generator("b")
        with self.assertRaises(NotACycleError):
            bracket_set(projective_plane_presentation(), [b, a, a])

    def test_fat_wedge_attaching_class(self):
        model = fat_wedge([3, 3, 3])
        result = bracket_set(model.presentation, fat_wedge_classes(model))
        self.assertEqual(result.degree, 7)
        self.assertTrue(result.is_constant())
        self.assertEqual(result.free_parameters, [])
        self.assertTrue(any(value != 0 for value in result.value_at({}).values()))

    def test_boundary_perturbed_representative(self):
        a, e, f = (LieExpr.generator(name) for name in ("a", "e", "f"))
        target = DGLPresentation(
            GeneratorSet([("a", 1), ("f", 1), ("e", 2), ("b", 3)], 5),
            {"e": f, "b": LieExpr.bracket(a, a)},
        )
        plain = classify(bracket_set(target, [a, a, a]))
        perturbed = classify(bracket_set(target, [a + f, a, a]))
        self.assertEqual(plain.cardinality, Cardinality.SINGLETON)
        self.assertEqual(perturbed.cardinality, Cardinality.SINGLETON)
        self.assertEqual(perturbed.value, plain.value)
        self.assertTrue(any(value != 0 for value in plain.value.values()))
        self.assertEqual(perturbed.zero_membership, ZeroMembership.NO)
