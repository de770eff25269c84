import unittest

from whitehead_lib.exceptions import DegreeError, TruncationError
from whitehead_lib.whitehead import (
    build_model,
    generator_name,
    index_words,
    splittings,
)


class TestIndexWords(unittest.TestCase):
    def test_proper_words(self):
        self.assertEqual(
            index_words(3), [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
        )
        self.assertEqual(index_words(3, proper=False)[-1], (1, 2, 3))

    def test_generator_names(self):
        self.assertEqual(generator_name((1, 2), 3), "u12")
        self.assertEqual(generator_name((1, 10), 10), "u1_10")

    def test_splittings_keep_least_index_first(self):
        self.assertEqual(
            splittings((1, 2, 3)),
            [
                ((1,), (2, 3), (0, 1, 2)),
                ((1, 2), (3,), (0, 1, 2)),
                ((1, 3), (2,), (0, 2, 1)),
            ],
        )


class TestBuildModel(unittest.TestCase):
    def test_two_spheres(self):
        model = build_model([3, 3])
        names = model.presentation.generators.names
        self.assertEqual(names, ["u1", "u2"])
        self.assertEqual(model.degree((1,)), 2)
        self.assertEqual(model.attaching_cycle.render(), "[u1, u2]")
        self.assertEqual(model.cycle_degree, 4)

    def test_differential_signs(self):
        odd = build_model([3, 3, 3])
        self.assertEqual(odd.presentation.generator_differential("u12").render(), "[u1, u2]")
        self.assertEqual(odd.degree((1, 2)), 5)
        even = build_model([2, 2, 2])
        self.assertEqual(even.presentation.generator_differential("u12").render(), "-[u1, u2]")

    def test_attaching_terms(self):
        self.assertEqual(len(build_model([3, 3, 3]).attaching_terms()), 3)
        self.assertEqual(len(build_model([3, 3, 3, 3]).attaching_terms()), 7)

    def test_default_truncation(self):
        model = build_model([3, 3, 3])
        self.assertEqual(model.presentation.generators.truncation, 8)

    def test_invalid_dimensions(self):
        with self.assertRaises(DegreeError):
            build_model([3])
        with self.assertRaises(DegreeError):
            build_model([1, 3])

    def test_truncation_too_low(self):
        with self.assertRaises(TruncationError):
            build_model([3, 3], truncation=4)
