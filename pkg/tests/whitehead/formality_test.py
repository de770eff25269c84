import unittest

from whitehead_lib.catalog import (
    fat_wedge,
    fat_wedge_classes,
    projective_plane_classes,
    projective_plane_presentation,
)
from whitehead_lib.enums import Cardinality, FormalityVerdict, ZeroMembership
from whitehead_lib.whitehead import formality_obstruction, homology_bracket_set


class TestFormalityObstruction(unittest.TestCase):
    def test_projective_plane(self):
        report = formality_obstruction(
            projective_plane_presentation(), projective_plane_classes()
        )
        self.assertEqual(report.verdict, FormalityVerdict.NOT_FORMAL_ZERO_CRITERION)
        self.assertTrue(report.not_formal)
        self.assertEqual(report.algebra_classification.zero_membership, ZeroMembership.NO)
        self.assertEqual(
            report.homology_classification.cardinality, Cardinality.SINGLETON
        )
        self.assertEqual(
            report.homology_classification.zero_membership, ZeroMembership.YES
        )

    def test_homology_bracket_vanishes(self):
        result = homology_bracket_set(
            projective_plane_presentation(), projective_plane_classes()
        )
        self.assertTrue(result.is_constant())
        self.assertEqual(result.render(), {})

    def test_fat_wedge(self):
        model = fat_wedge([3, 3, 3])
        report = formality_obstruction(model.presentation, fat_wedge_classes(model))
        self.assertEqual(report.verdict, FormalityVerdict.NOT_FORMAL_ZERO_CRITERION)
