import unittest

from whitehead_lib.exceptions import DegreeError
from whitehead_lib.sullivan import degree_relations, exotic_structure, intrinsic_coformality


class TestIntrinsicCoformality(unittest.TestCase):
    def test_few_spheres(self):
        self.assertTrue(intrinsic_coformality([3]))
        self.assertTrue(intrinsic_coformality([3, 5, 7, 9]))

    def test_no_degree_relation(self):
        self.assertTrue(intrinsic_coformality([3, 5, 7, 9, 13]))
        self.assertEqual(degree_relations([3, 5, 7, 9, 13]), [])

    def test_degree_relation(self):
        report = intrinsic_coformality([3, 3, 3, 3, 11])
        self.assertFalse(report)
        self.assertEqual(report.witness, (5, (1, 2, 3, 4)))
        self.assertEqual(report.describe_witness(), "n5 = 3+3+3+3-1")

    def test_odd_subsets_do_not_count(self):
        # 5 = 3 + 3 - 1 uses only two spheres
        self.assertTrue(intrinsic_coformality([3, 3, 5, 7, 9]))

    def test_eilenberg_mac_lane(self):
        report = intrinsic_coformality([2, 4, 6, 8, 18], eilenberg_mac_lane=True)
        self.assertTrue(report.coformal)
        self.assertTrue(report.eilenberg_mac_lane)
        with self.assertRaises(DegreeError):
            intrinsic_coformality([3], eilenberg_mac_lane=True)

    def test_invalid_dimensions(self):
        with self.assertRaises(DegreeError):
            intrinsic_coformality([4, 5])
        with self.assertRaises(DegreeError):
            intrinsic_coformality([1])

    def test_exotic_structure(self):
        structure = exotic_structure([3, 3, 3, 3, 11], (5, (1, 2, 3, 4)))
        self.assertEqual(structure.degrees["x5"], 10)
        self.assertEqual(dict(structure.bracket(("x1", "x2", "x3", "x4"))), {"x5": 1})
        self.assertEqual(structure.arities(), [4])
