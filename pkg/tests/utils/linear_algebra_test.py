import unittest
from fractions import Fraction

from whitehead_lib.utils import EchelonForm, Subquotient, combine, independent_subset, kernel, rank


class TestEchelonForm(unittest.TestCase):
    def test_rank_and_relations(self):
        echelon = EchelonForm()
        self.assertTrue(echelon.add({"a": 1, "b": 1}, "first"))
        self.assertTrue(echelon.add({"b": 2}, "second"))
        self.assertFalse(echelon.add({"a": 1, "b": 3}, "third"))
        self.assertEqual(echelon.rank, 2)
        self.assertEqual(echelon.independent_tags, ["first", "second"])
        relation = echelon.relations[0]
        self.assertEqual(dict(relation), {"third": 1, "first": -1, "second": -1})

    def test_express(self):
        echelon = EchelonForm()
        echelon.add({"a": 1}, 0)
        echelon.add({"a": 1, "b": 1}, 1)
        self.assertEqual(dict(echelon.express({"a": 3, "b": 1})), {0: 2, 1: 1})
        self.assertIsNone(echelon.express({"c": 1}))
        self.assertTrue(echelon.contains({"b": Fraction(1, 2)}))


class TestHelpers(unittest.TestCase):
    def test_kernel(self):
        relations = kernel([{"a": 1}, {"a": 2}, {"b": 1}])
        self.assertEqual(len(relations), 1)
        self.assertEqual(dict(relations[0]), {1: 1, 0: -2})

    def test_rank(self):
        self.assertEqual(rank([{"a": 1}, {"a": -1}, {}]), 1)
        self.assertEqual(rank([]), 0)

    def test_independent_subset(self):
        self.assertEqual(independent_subset([{"a": 1}, {"a": 2}, {"b": 1}]), [0, 2])

    def test_combine(self):
        vectors = [{"a": 1}, {"a": 1, "b": 1}]
        self.assertEqual(dict(combine({0: 2, 1: -1}, vectors)), {"a": 1, "b": -1})


class TestSubquotient(unittest.TestCase):
    def setUp(self):
        self.quotient = Subquotient([{"a": 1}, {"b": 1}], [{"a": 1}])

    def test_dimension(self):
        self.assertEqual(self.quotient.dimension, 1)
        self.assertEqual(self.quotient.denominator_rank, 1)
        self.assertEqual(self.quotient.representative_indices, [1])

    def test_coordinates(self):
        self.assertEqual(self.quotient.coordinates({"a": 3, "b": 2}), [2])
        self.assertEqual(self.quotient.coordinates({"a": 3}), [0])
        self.assertIsNone(self.quotient.coordinates({"c": 1}))

    def test_denominator(self):
        self.assertTrue(self.quotient.in_denominator({"a": 5}))
        self.assertFalse(self.quotient.in_denominator({"b": 1}))
