# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


from typing import Iterator, NamedTuple, Optional, Tuple

from ietforge._common import BudgetExhausted
from ietforge.a_numeric import QAlpha, QAlphaLike, as_qalpha
from ietforge.b_core._10_iet import Iet, _locate_unchecked, locate
from ietforge.b_core._20_algebra import invert


class OrbitPoint(NamedTuple):
    """T^step(start) with the occupation numbers of the intervals.

    `position = start + sum(counts[i] * delta_i)` holds exactly; for
    negative steps the counts are negative. `drift` is position - start.
    """
    start: QAlpha
    position: QAlpha
    step: int
    counts: Tuple[int, ...]

    @property
    def drift(self) -> QAlpha:
        return self.position - self.start

    def agrees_with(self, T: Iet) -> bool:
        total = self.start
        for n, d in zip(self.counts, T.translations):
            total = total + d * n
        return sum(self.counts) == self.step and total == self.position


def orbit(T: Iet, x0: QAlphaLike) -> Iterator[Tuple[QAlpha, int]]:
    """Endless forward orbit: pairs (T^k(x0), interval index of it),
    starting with k = 0."""
    x = as_qalpha(x0)
    i = locate(T, x)
    translations = T.translations
    while True:
        yield x, i
        x = x + translations[i - 1]
        i = _locate_unchecked(T, x)


def iterate(T: Iet, x0: QAlphaLike, steps: int,
            budget: Optional[int] = None) -> OrbitPoint:
    """T^steps(x0). Negative counts iterate the inverse exchange. A step
    budget, when given, bounds the work."""
    x0 = as_qalpha(x0)
    if budget is not None and abs(steps) > budget:
        raise BudgetExhausted(f"{abs(steps)} steps exceed the budget "
                              f"of {budget}")
    counts = [0] * T.m
    if steps >= 0:
        gen = orbit(T, x0)
        x, i = next(gen)
        for _ in range(steps):
            counts[i - 1] += 1
            x, i = next(gen)
        return OrbitPoint(x0, x, steps, tuple(counts))

    # interval j of the inverse is the image of interval pi^-1(j) of T
    source_of = T.perm.inverse()
    gen = orbit(invert(T), x0)
    x, j = next(gen)
    for _ in range(-steps):
        counts[source_of(j) - 1] -= 1
        x, j = next(gen)
    return OrbitPoint(x0, x, steps, tuple(counts))
