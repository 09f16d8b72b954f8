# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import unittest
from fractions import Fraction

from ietforge._common import ParameterOutOfRange, SpecSemanticError
from ietforge.a_combinatorics import Permutation
from ietforge.a_numeric import NoAlpha, QAlpha
from ietforge.b_core import build_iet, iet_equal
from ietforge.c_spectral import verify_affine_eigen
from ietforge.d_families import FAMILY_NAMES, NATIVE, UNIT, block_swap, \
    build_family, family_name, half_block_swap, resolve_sigma, rotation, \
    twisted_reversal
from tests.common import ALPHA, oracle_of


class TestBuilders(unittest.TestCase):

    def test_twisted_reversal_shape(self):
        T = twisted_reversal(6, oracle_of("sqrt(2)/8"))
        self.assertEqual(T.perm, Permutation([5, 4, 3, 2, 6, 1]))
        self.assertEqual(T.lengths[-2:], (Fraction(1, 5) - ALPHA, ALPHA))
        self.assertEqual(T.total_length, 1)

    def test_twisted_reversal_range(self):
        with self.assertRaises(ParameterOutOfRange):
            twisted_reversal(3, oracle_of("sqrt(2)/8"))
        with self.assertRaises(ParameterOutOfRange):
            twisted_reversal(4, oracle_of("sqrt(2)/4"))
        with self.assertRaises(ParameterOutOfRange):
            twisted_reversal(5, NoAlpha())

    def test_block_swap(self):
        oracle = oracle_of("sqrt(2)/4")
        T = block_swap(3, "cycle", oracle)
        self.assertEqual(T.perm, Permutation([4, 3, 6, 5, 2, 1]))
        self.assertEqual(T.total_length, 3)
        sigma = Permutation.shift_cycle(3)
        for i in range(1, 4):
            self.assertEqual(T.translations[2 * i - 2],
                             1 - ALPHA + sigma(i) - i)
            self.assertEqual(T.translations[2 * i - 1],
                             sigma(i) - i - ALPHA)
        unit = block_swap(3, "cycle", oracle, chart=UNIT)
        self.assertEqual(unit.total_length, 1)
        with self.assertRaises(ParameterOutOfRange):
            block_swap(0, "cycle", oracle)
        with self.assertRaises(ParameterOutOfRange):
            block_swap(2, "cycle", oracle, chart="polar")

    def test_block_swap_single(self):
        T = block_swap(1, "identity", oracle_of("sqrt(2)/4"))
        self.assertEqual(T.perm, Permutation([2, 1]))
        self.assertEqual(T.lengths, (ALPHA, 1 - ALPHA))
        self.assertEqual(T.translations[0], 1 - ALPHA)

    def test_half_block_swap(self):
        T = half_block_swap(oracle_of("sqrt(2)/4"))
        half = Fraction(1, 2)
        self.assertEqual(T.translations,
                         (1 - ALPHA, half - ALPHA, -ALPHA, -half - ALPHA))
        with self.assertRaises(ParameterOutOfRange):
            half_block_swap(oracle_of("sqrt(3)/3"))

    def test_sigma(self):
        self.assertEqual(resolve_sigma("reversal", 3),
                         Permutation([3, 2, 1]))
        self.assertEqual(resolve_sigma("[2,3,1]", 3),
                         Permutation([2, 3, 1]))
        with self.assertRaises(SpecSemanticError):
            resolve_sigma("[2,1]", 3)


class TestBuildFamily(unittest.TestCase):

    def test_names(self):
        self.assertEqual(family_name("conj_rot"), "conjugated_rotation")
        self.assertEqual(family_name("Twisted-Reversal"), "twisted_reversal")
        self.assertEqual(family_name("thm14"), "twisted_reversal")
        self.assertEqual(family_name("thm15"), "block_swap")
        self.assertEqual(family_name("n2-rescaled"), "half_block_swap")
        self.assertIn("block_swap", FAMILY_NAMES)
        with self.assertRaises(SpecSemanticError):
            family_name("baker")

    def test_witnesses_verify(self):
        oracle = oracle_of("sqrt(2)/8")
        cases = [("rotation", {}),
                 ("twisted_reversal", {"m": 5}),
                 ("block_swap", {"n": 3, "sigma": "reversal"}),
                 ("block_swap", {"n": 3, "sigma": "cycle", "chart": UNIT}),
                 ("half_block_swap", {})]
        for name, params in cases:
            family = build_family(name, params, oracle)
            with self.subTest(name=name, params=params):
                self.assertIsNotNone(family.witness)
                verify_affine_eigen(family.iet, family.witness)

    def test_block_swap_witness(self):
        family = build_family("block_swap", {"n": 2, "sigma": "cycle"},
                              oracle_of("sqrt(2)/4"))
        self.assertEqual(family.chart, NATIVE)
        self.assertEqual(family.witness.r, -ALPHA)
        self.assertEqual(family.witness.s, 1)
        self.assertEqual(dict(family.params),
                         {"n": "2", "sigma": "[2,1]", "chart": NATIVE})

    def test_half_block_swap_witness(self):
        family = build_family("half_block_swap", {}, oracle_of("sqrt(2)/4"))
        self.assertEqual(family.witness.r, -ALPHA)
        self.assertEqual(family.witness.s, Fraction(1, 2))
        self.assertEqual(family.witness.p, (2, 1, 0, -1))

    def test_footnote(self):
        family = build_family("twisted_reversal", {"m": 5},
                              oracle_of("sqrt(2)/8"))
        self.assertEqual(len(family.footnotes), 1)
        self.assertTrue(family.footnotes[0].startswith("delta_4 = a "))

    def test_conjugated_rotation(self):
        oracle = oracle_of("sqrt(2)/4")
        h = build_iet(Permutation([2, 3, 1]),
                      [QAlpha(Fraction(1, 2)), QAlpha(Fraction(1, 3)),
                       QAlpha(Fraction(1, 6))], NoAlpha())
        family = build_family("conj_rot", {"h": h}, oracle)
        self.assertEqual(family.name, "conjugated_rotation")
        self.assertIsNone(family.witness)
        self.assertLessEqual(family.iet.m, 6)
        identity = build_iet(Permutation([1]), [QAlpha(1)], NoAlpha())
        self.assertTrue(iet_equal(
            build_family("conjugated_rotation", {"h": identity}, oracle).iet,
            rotation(oracle)))

    def test_missing_parameter(self):
        with self.assertRaises(SpecSemanticError):
            build_family("twisted_reversal", {}, oracle_of("sqrt(2)/8"))
        with self.assertRaises(SpecSemanticError):
            build_family("block_swap", {"n": 2}, oracle_of("sqrt(2)/8"))

    def test_h_on_wrong_domain(self):
        h = build_iet(Permutation([1]), [QAlpha(2)], NoAlpha())
        with self.assertRaises(ParameterOutOfRange):
            build_family("conj_rot", {"h": h}, oracle_of("sqrt(2)/4"))


if __name__ == "__main__":
    unittest.main()
