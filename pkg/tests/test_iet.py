# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import random
import unittest
from fractions import Fraction

from ietforge._common import LengthMismatch, MixedIrrationals, \
    NonPositiveLength, OutOfDomain
from ietforge.a_combinatorics import Permutation
from ietforge.a_numeric import NoAlpha, QAlpha, parse_alpha, qa_sign, \
    qa_sort_key
from ietforge.b_core import apply, build_iet, check_same_universe, locate
from ietforge.d_families import rotation, twisted_reversal
from tests.common import ALPHA, TEST_ALPHAS, gen_random_iet, \
    gen_random_point, oracle_of


class TestTranslations(unittest.TestCase):

    def test_twisted_reversal_5(self):
        T = twisted_reversal(5, oracle_of("sqrt(2)/8"))
        half = Fraction(1, 2)
        self.assertEqual(T.translations,
                         (ALPHA + half, ALPHA, ALPHA - half, ALPHA,
                          ALPHA - 1))

    def test_twisted_reversal_4(self):
        T = twisted_reversal(4, oracle_of("sqrt(2)/6"))
        third = Fraction(1, 3)
        self.assertEqual(T.translations,
                         (ALPHA + third, ALPHA - third, ALPHA, ALPHA - 1))
        self.assertEqual(T.breakpoints,
                         (QAlpha(), QAlpha(third), QAlpha(2 * third),
                          1 - ALPHA, QAlpha(1)))

    def test_identity(self):
        T = build_iet(Permutation.identity(3),
                      [QAlpha(Fraction(1, 3))] * 3, NoAlpha())
        self.assertEqual(T.translations, (QAlpha(),) * 3)

    def test_single_interval(self):
        T = build_iet(Permutation([1]), [QAlpha(1)], NoAlpha())
        self.assertEqual(T.translations, (QAlpha(),))
        self.assertEqual(T.total_length, 1)
        self.assertEqual(T.discontinuities, ())

    def test_rotation(self):
        oracle = oracle_of("sqrt(2)/4")
        T = rotation(oracle)
        self.assertEqual(T.translations, (ALPHA, ALPHA - 1))
        self.assertEqual(apply(T, 1 - ALPHA), 0)
        self.assertEqual(apply(T, 0), ALPHA)
        self.assertEqual(locate(T, 1 - ALPHA), 2)
        self.assertEqual(locate(T, Fraction(1, 2)), 1)


class TestPartition(unittest.TestCase):

    def test_images_tile_the_domain(self):
        rnd = random.Random(1)
        for txt in TEST_ALPHAS:
            oracle = oracle_of(txt)
            for _ in range(20):
                T = gen_random_iet(rnd, oracle)
                with self.subTest(alpha=txt, T=T):
                    self.assertEqual(T.image_breakpoints[-1],
                                     T.total_length)
                    for i in range(1, T.m + 1):
                        lo, hi = T.interval(i)
                        d = T.translations[i - 1]
                        j = T.perm(i)
                        self.assertEqual(lo + d, T.image_breakpoints[j - 1])
                        self.assertEqual(hi + d, T.image_breakpoints[j])

    def test_map_is_injective_on_samples(self):
        rnd = random.Random(2)
        oracle = oracle_of("sqrt(3)/5")
        for _ in range(20):
            T = gen_random_iet(rnd, oracle, min_m=2)
            total = T.total_length.q
            points = {QAlpha(gen_random_point(rnd, total))
                      for _ in range(50)}
            images = [apply(T, x) for x in points]
            self.assertEqual(len(set(images)), len(points))
            for y in images:
                self.assertGreaterEqual(qa_sign(y, oracle), 0)
                self.assertGreater(qa_sign(T.total_length - y, oracle), 0)

    def test_image_lengths_sum_to_total(self):
        rnd = random.Random(4)
        oracle = oracle_of("sqrt(2)/8")
        key = qa_sort_key(oracle)
        for _ in range(30):
            T = gen_random_iet(rnd, oracle)
            images = sorted(((lo + d, hi + d) for (lo, hi), d in
                             zip((T.interval(i) for i in range(1, T.m + 1)),
                                 T.translations)),
                            key=lambda iv: key(iv[0]))
            self.assertEqual(images[0][0], 0)
            for (_, hi), (lo, _) in zip(images, images[1:]):
                self.assertEqual(hi, lo)
            self.assertEqual(images[-1][1], T.total_length)

    def test_locate_respects_breakpoints(self):
        rnd = random.Random(3)
        oracle = oracle_of("sqrt(7)/6")
        for _ in range(30):
            T = gen_random_iet(rnd, oracle)
            for i in range(1, T.m + 1):
                lo, _ = T.interval(i)
                self.assertEqual(locate(T, lo), i)


class TestErrors(unittest.TestCase):

    def test_out_of_domain(self):
        T = rotation(oracle_of("sqrt(2)/4"))
        with self.assertRaises(OutOfDomain):
            apply(T, 1)
        with self.assertRaises(OutOfDomain):
            apply(T, -ALPHA)
        with self.assertRaises(OutOfDomain):
            locate(T, QAlpha(2))

    def test_non_positive_length(self):
        oracle = oracle_of("sqrt(2)/2")
        with self.assertRaises(NonPositiveLength) as ctx:
            build_iet(Permutation([2, 1]),
                      [Fraction(1, 3) - ALPHA, ALPHA], oracle)
        self.assertEqual(ctx.exception.index, 1)
        with self.assertRaises(NonPositiveLength) as ctx:
            build_iet(Permutation([2, 1]), [QAlpha(1), QAlpha()], oracle)
        self.assertEqual(ctx.exception.index, 2)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            build_iet(Permutation([2, 1]), [QAlpha(1)], NoAlpha())

    def test_mixed_irrationals(self):
        check_same_universe(oracle_of("sqrt(2)/4"), oracle_of("sqrt(2)/4"))
        with self.assertRaises(MixedIrrationals):
            check_same_universe(oracle_of("sqrt(2)/4"),
                                oracle_of("sqrt(3)/5"))

    def test_structural_equality(self):
        oracle = oracle_of("sqrt(2)/4")
        self.assertEqual(rotation(oracle), rotation(oracle_of("sqrt(2)/4")))
        self.assertNotEqual(rotation(oracle),
                            rotation(oracle_of("sqrt(3)/5")))

    def test_equal_exchanges_hash_alike(self):
        oracle = parse_alpha("1/3", allow_rational=True)
        perm = Permutation([2, 1])
        T = build_iet(perm, [ALPHA, 1 - ALPHA], oracle)
        S = build_iet(perm, [QAlpha(Fraction(1, 3)), QAlpha(Fraction(2, 3))],
                      oracle)
        self.assertEqual(T, S)
        self.assertEqual(hash(T), hash(S))
        self.assertEqual(len({T, S}), 1)


if __name__ == "__main__":
    unittest.main()
