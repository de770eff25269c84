import unittest

from whitehead_lib.graded import (
    koszul_sign,
    koszul_sort,
    permutation_sign,
    shuffles,
    unshuffle_blocks,
)


class TestKoszulSign(unittest.TestCase):
    def test_odd_swap(self):
        self.assertEqual(koszul_sign((1, 0), [1, 1]), -1)

    def test_even_swap(self):
        self.assertEqual(koszul_sign((1, 0), [1, 2]), 1)
        self.assertEqual(koszul_sign((1, 0), [2, 2]), 1)

    def test_cycle_of_odd_symbols(self):
        # moving the last of three odd symbols to the front passes two of them
        self.assertEqual(koszul_sign((2, 0, 1), [1, 1, 1]), 1)
        self.assertEqual(koszul_sign((2, 0, 1), [1, 1, 2]), 1)
        self.assertEqual(koszul_sign((2, 0, 1), [1, 2, 1]), -1)

    def test_rejects_bad_permutation(self):
        with self.assertRaises(ValueError):
            koszul_sign((0, 0), [1, 1])
        with self.assertRaises(ValueError):
            koszul_sign((0, 1), [1])


class TestPermutationSign(unittest.TestCase):
    def test_signature(self):
        self.assertEqual(permutation_sign(()), 1)
        self.assertEqual(permutation_sign((1, 0)), -1)
        self.assertEqual(permutation_sign((1, 2, 0)), 1)
        self.assertEqual(permutation_sign((0, 2, 1, 3)), -1)


class TestShuffles(unittest.TestCase):
    def test_two_one(self):
        self.assertEqual(shuffles(2, 1), [(0, 1, 2), (0, 2, 1), (1, 2, 0)])

    def test_fix_first(self):
        self.assertEqual(shuffles(2, 1, fix_first=True), [(0, 1, 2), (0, 2, 1)])
        self.assertEqual(shuffles(0, 2, fix_first=True), [])

    def test_counts(self):
        self.assertEqual(len(shuffles(2, 3)), 10)
        self.assertEqual(len(unshuffle_blocks([1, 1, 1])), 6)
        self.assertEqual(len(unshuffle_blocks([2, 2])), 6)

    def test_negative_block(self):
        with self.assertRaises(ValueError):
            shuffles(-1, 2)


class TestKoszulSort(unittest.TestCase):
    def setUp(self):
        self.position = {"a": 0, "b": 1, "x": 2}.__getitem__
        self.degree = {"a": 1, "b": 1, "x": 2}.__getitem__

    def test_odd_symbols_anticommute(self):
        self.assertEqual(koszul_sort(("b", "a"), self.position, self.degree), (("a", "b"), -1))

    def test_even_symbol_commutes(self):
        self.assertEqual(koszul_sort(("x", "a"), self.position, self.degree), (("a", "x"), 1))

    def test_repeated_odd_symbol_vanishes(self):
        self.assertEqual(koszul_sort(("a", "a"), self.position, self.degree)[1], 0)
        self.assertEqual(koszul_sort(("x", "x"), self.position, self.degree)[1], 1)

    def test_antisymmetric(self):
        word, sign = koszul_sort(("x", "a"), self.position, self.degree, antisymmetric=True)
        self.assertEqual((word, sign), (("a", "x"), -1))
        self.assertEqual(
            koszul_sort(("x", "x"), self.position, self.degree, antisymmetric=True)[1], 0
        )
        self.assertEqual(
            koszul_sort(("b", "a"), self.position, self.degree, antisymmetric=True)[1], 1
        )
