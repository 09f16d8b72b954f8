# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import random
import unittest

from ietforge.e_report import SvgOptions, render_svg
from ietforge.d_families import block_swap, twisted_reversal
from tests.common import TEST_ALPHAS, gen_random_iet, oracle_of


class TestSvg(unittest.TestCase):

    def test_one_segment_per_interval(self):
        rnd = random.Random(2)
        for txt in TEST_ALPHAS:
            T = gen_random_iet(rnd, oracle_of(txt))
            svg = render_svg(T)
            with self.subTest(T=T):
                self.assertTrue(svg.startswith("<svg xmlns="))
                self.assertTrue(svg.endswith("</svg>\n"))
                self.assertEqual(svg.count('stroke-width="2"'), T.m)
                self.assertEqual(svg.count("<circle"), 2 * T.m)

    def test_deterministic(self):
        T = twisted_reversal(5, oracle_of("sqrt(2)/8"))
        self.assertEqual(render_svg(T), render_svg(T))

    def test_options(self):
        T = block_swap(3, "cycle", oracle_of("sqrt(2)/4"))
        bare = render_svg(T, SvgOptions(labels=False, grid=False))
        self.assertNotIn("<text", bare)
        self.assertNotIn("stroke-dasharray", bare)
        full = render_svg(T)
        self.assertIn("<text", full)
        self.assertIn("stroke-dasharray", full)
        self.assertIn('width="560"', full)


if __name__ == "__main__":
    unittest.main()
