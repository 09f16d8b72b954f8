# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import bisect
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ietforge._common import FLOAT_MODE_THRESHOLD
from ietforge.a_numeric import QAlphaLike, as_qalpha, qa_float, qa_sign
from ietforge.b_core import Iet, Interval, locate, orbit

logger = logging.getLogger(__name__)


class BirkhoffStats(NamedTuple):
    """Visit frequencies of the orbit x0, T(x0), ..., T^{N-1}(x0) against
    the Lebesgue proportions |J|/r of the test intervals."""
    start: str
    steps: int
    mode: str  # "exact" or "float"
    cells: Tuple[Interval, ...]
    counts: np.ndarray
    frequencies: np.ndarray
    expected: np.ndarray
    deviations: np.ndarray

    @property
    def max_deviation(self) -> float:
        if len(self.deviations) == 0:
            return 0.0
        return float(self.deviations.max())


def _count_exact(T: Iet, x0, steps: int, cells: Sequence[Interval],
                 by_interval: bool) -> List[int]:
    oracle = T.oracle
    counts = [0] * len(cells)
    gen = orbit(T, x0)
    for _ in range(steps):
        x, i = next(gen)
        if by_interval:
            counts[i - 1] += 1
            continue
        for k, cell in enumerate(cells):
            if qa_sign(x - cell.lo, oracle) >= 0 \
                    and qa_sign(cell.hi - x, oracle) > 0:
                counts[k] += 1
    return counts


def _count_float(T: Iet, x0, steps: int,
                 cells: Sequence[Interval]) -> List[int]:
    oracle = T.oracle
    breaks = T.float_breaks()
    deltas = [qa_float(d, oracle) for d in T.translations]
    bounds = [(qa_float(c.lo, oracle), qa_float(c.hi, oracle)) for c in cells]
    r = breaks[-1]
    m = T.m
    counts = [0] * len(cells)

    # compensated (Kahan) summation of the translations
    x = qa_float(x0, oracle)
    compensation = 0.0
    for _ in range(steps):
        for k, (lo, hi) in enumerate(bounds):
            if lo <= x < hi:
                counts[k] += 1
        i = min(max(bisect.bisect_right(breaks, x), 1), m)
        y = deltas[i - 1] - compensation
        t = x + y
        compensation = (t - x) - y
        x = t
        if x < 0.0 or x >= r:
            x = min(max(x, 0.0), np.nextafter(r, 0.0))
            compensation = 0.0
    return counts


def birkhoff_discrepancy(T: Iet, x0: QAlphaLike, steps: int,
                         cells: Optional[Sequence[Tuple[QAlphaLike,
                                                        QAlphaLike]]] = None,
                         float_threshold: int = FLOAT_MODE_THRESHOLD
                         ) -> BirkhoffStats:
    """Runs `steps` steps from x0 and tallies the visits of every test
    interval (by default the intervals of T). Above `float_threshold`
    steps the orbit is followed in floating point."""
    if steps < 1:
        raise ValueError("steps must be positive")
    x0 = as_qalpha(x0)
    locate(T, x0)
    oracle = T.oracle
    by_interval = cells is None
    if cells is None:
        cell_list = [Interval(*T.interval(i)) for i in range(1, T.m + 1)]
    else:
        cell_list = [Interval(as_qalpha(lo), as_qalpha(hi))
                     for lo, hi in cells]

    if steps > float_threshold:
        mode = "float"
        counts = _count_float(T, x0, steps, cell_list)
    else:
        mode = "exact"
        counts = _count_exact(T, x0, steps, cell_list, by_interval)
    logger.debug("Birkhoff %s run of %d steps from %s", mode, steps, x0)

    r = qa_float(T.total_length, oracle)
    counts_arr = np.array(counts, dtype=np.int64)
    frequencies = counts_arr / float(steps)
    expected = np.array([qa_float(c.hi - c.lo, oracle) / r
                         for c in cell_list], dtype=float)
    deviations = np.abs(frequencies - expected)
    return BirkhoffStats(str(x0), steps, mode, tuple(cell_list), counts_arr,
                         frequencies, expected, deviations)
