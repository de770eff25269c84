import unittest

from whitehead_lib.exceptions import DegreeError
from whitehead_lib.linf import (
    LInfMorphismTables,
    LInfStructure,
    check_linf_morphism,
    compositions,
    set_partitions,
)


def collapse_structure() -> LInfStructure:
    return LInfStructure(
        [("x", 1), ("y", 3), ("z", 6)],
        {2: {("y", "y"): {"z": 1}}, 3: {("x", "x", "y"): {"z": 1}}},
    )


class TestCombinatorics(unittest.TestCase):
    def test_compositions(self):
        self.assertEqual(list(compositions(3, 2)), [(1, 2), (2, 1)])
        self.assertEqual(list(compositions(2, 3)), [])

    def test_set_partitions(self):
        # Bell numbers
        self.assertEqual([len(list(set_partitions(n))) for n in range(5)], [1, 1, 2, 5, 15])


class TestLInfMorphism(unittest.TestCase):
    def test_identity(self):
        structure = collapse_structure()
        report = check_linf_morphism(LInfMorphismTables.identity(structure), 3)
        self.assertTrue(report)
        self.assertTrue(report.agree)

    def test_scaling_is_not_a_morphism(self):
        structure = collapse_structure()
        doubled = LInfMorphismTables(
            structure, structure, {1: {(name,): {name: 2} for name in structure.names}}
        )
        report = check_linf_morphism(doubled, 3)
        self.assertFalse(report)
        self.assertEqual(report.tabular_failure, 2)
        self.assertEqual(report.coalgebra_failure, 2)

    def test_rescaling_is_a_morphism(self):
        # f(x) = x, f(y) = y, f(z) = 2z intertwines l with the doubled brackets
        source = collapse_structure()
        target = LInfStructure(
            source.basis,
            {2: {("y", "y"): {"z": 2}}, 3: {("x", "x", "y"): {"z": 2}}},
        )
        scale = {"x": 1, "y": 1, "z": 2}
        f = LInfMorphismTables(
            source, target, {1: {(name,): {name: scale[name]} for name in source.names}}
        )
        report = check_linf_morphism(f, 3)
        self.assertTrue(report)

    def test_degree_gate(self):
        structure = collapse_structure()
        with self.assertRaises(DegreeError):
            LInfMorphismTables(structure, structure, {1: {("x",): {"y": 1}}})
