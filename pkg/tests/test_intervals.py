# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import unittest
from fractions import Fraction

from ietforge.a_numeric import QAlpha
from ietforge.b_core import Interval, IntervalUnion, interval_image, \
    split_at_breakpoints
from ietforge.d_families import rotation
from tests.common import ALPHA, oracle_of

QUARTER = Fraction(1, 4)


def _iv(lo, hi) -> Interval:
    return Interval(QAlpha(lo) if not isinstance(lo, QAlpha) else lo,
                    QAlpha(hi) if not isinstance(hi, QAlpha) else hi)


class TestIntervalUnion(unittest.TestCase):

    def setUp(self):
        self.oracle = oracle_of("sqrt(2)/4")

    def test_merges_touching(self):
        u = IntervalUnion([_iv(3 * QUARTER, 1), _iv(0, QUARTER),
                           _iv(QUARTER, 2 * QUARTER)], self.oracle)
        self.assertEqual(u.intervals, [_iv(0, 2 * QUARTER),
                                       _iv(3 * QUARTER, 1)])
        self.assertEqual(u.measure, 3 * QUARTER)
        self.assertEqual(str(u), "[0, 1/2) u [3/4, 1)")

    def test_overlaps_and_empty_pieces(self):
        u = IntervalUnion([_iv(0, ALPHA), _iv(QUARTER, 2 * QUARTER),
                           _iv(QUARTER, QUARTER)], self.oracle)
        self.assertEqual(u.intervals, [_iv(0, 2 * QUARTER)])
        self.assertEqual(str(IntervalUnion([], self.oracle)), "{}")

    def test_difference(self):
        u = IntervalUnion([_iv(0, 2 * QUARTER), _iv(3 * QUARTER, 1)],
                          self.oracle)
        v = IntervalUnion([_iv(QUARTER, ALPHA),
                           _iv(Fraction(7, 8), Fraction(3, 2))], self.oracle)
        diff = u.difference(v)
        self.assertEqual(diff.intervals, [_iv(0, QUARTER),
                                          _iv(ALPHA, 2 * QUARTER),
                                          _iv(3 * QUARTER, Fraction(7, 8))])
        self.assertEqual(len(v.difference(v)), 0)
        self.assertEqual(u.difference(IntervalUnion([], self.oracle)), u)
        self.assertEqual(v.difference(u).intervals,
                         [_iv(1, Fraction(3, 2))])
        for k in range(64):
            x = QAlpha(Fraction(k, 48))
            with self.subTest(x=x):
                self.assertEqual(diff.contains(x),
                                 u.contains(x) and not v.contains(x))

    def test_contains(self):
        u = IntervalUnion([_iv(0, QUARTER), _iv(ALPHA, 1)], self.oracle)
        self.assertTrue(u.contains(0))
        self.assertFalse(u.contains(QUARTER))
        self.assertTrue(u.contains(ALPHA))
        self.assertFalse(u.contains(1))

    def test_subset_and_union(self):
        small = IntervalUnion([_iv(QUARTER, ALPHA)], self.oracle)
        big = IntervalUnion([_iv(0, 2 * QUARTER)], self.oracle)
        self.assertTrue(small.issubset(big))
        self.assertFalse(big.issubset(small))
        self.assertEqual(small.union(big), big)

    def test_is_full(self):
        T = rotation(self.oracle)
        self.assertTrue(IntervalUnion([_iv(0, ALPHA), _iv(ALPHA, 1)],
                                      self.oracle).is_full(T))
        self.assertFalse(IntervalUnion([_iv(0, ALPHA)],
                                       self.oracle).is_full(T))


class TestImages(unittest.TestCase):

    def setUp(self):
        self.oracle = oracle_of("sqrt(2)/4")
        self.T = rotation(self.oracle)

    def test_split(self):
        pieces = split_at_breakpoints(self.T, _iv(0, 1))
        self.assertEqual([(p.lo, p.hi) for p in pieces],
                         [(QAlpha(), 1 - ALPHA), (1 - ALPHA, QAlpha(1))])
        self.assertEqual(len(split_at_breakpoints(self.T,
                                                  _iv(0, QUARTER))), 1)

    def test_interval_image(self):
        self.assertEqual(interval_image(self.T, _iv(0, 1 - ALPHA)),
                         [_iv(ALPHA, 1)])
        self.assertEqual(interval_image(self.T, _iv(0, 1)),
                         [_iv(ALPHA, 1), _iv(0, ALPHA)])

    def test_union_image(self):
        full = IntervalUnion([_iv(0, 1)], self.oracle)
        self.assertEqual(full.image(self.T), full)
        half = IntervalUnion([_iv(0, 2 * QUARTER)], self.oracle)
        self.assertEqual(half.image(self.T),
                         IntervalUnion([_iv(ALPHA, ALPHA + 2 * QUARTER)],
                                       self.oracle))
        self.assertEqual(half.image(self.T).measure, half.measure)


if __name__ == "__main__":
    unittest.main()
