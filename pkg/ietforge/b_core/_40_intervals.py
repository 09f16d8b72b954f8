# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Finite unions of half-open intervals with exact endpoints."""

from typing import Iterable, Iterator, List, NamedTuple

from ietforge.a_numeric import AlphaOracle, QAlpha, QAlphaLike, as_qalpha, \
    qa_equal, qa_sign, qa_sort_key
from ietforge.b_core._10_iet import Iet, _locate_unchecked
from ietforge.b_core._20_algebra import Piece


class Interval(NamedTuple):
    lo: QAlpha
    hi: QAlpha

    @property
    def length(self) -> QAlpha:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"


def split_at_breakpoints(T: Iet, iv: Interval) -> List[Piece]:
    """Cuts the interval at the discontinuities of T lying strictly inside
    it. Every piece is moved by T with a single translation."""
    oracle = T.oracle
    edges = [iv.lo]
    edges.extend(c for c in T.discontinuities
                 if qa_sign(c - iv.lo, oracle) > 0
                 and qa_sign(iv.hi - c, oracle) > 0)
    edges.append(iv.hi)
    return [Piece(lo, hi, T.translations[_locate_unchecked(T, lo) - 1])
            for lo, hi in zip(edges, edges[1:])]


def interval_image(T: Iet, iv: Interval) -> List[Interval]:
    """T(iv) as a list of intervals in the order of the pieces of iv."""
    return [Interval(p.lo + p.translation, p.hi + p.translation)
            for p in split_at_breakpoints(T, iv)]


class IntervalUnion:
    """Sorted disjoint intervals; touching neighbours are merged, so two
    unions are equal as sets exactly when their interval lists agree."""

    __slots__ = ["oracle", "intervals"]

    def __init__(self, intervals: Iterable[Interval], oracle: AlphaOracle):
        self.oracle = oracle
        self.intervals: List[Interval] = self._normalized(intervals)

    def _normalized(self, intervals: Iterable[Interval]) -> List[Interval]:
        oracle = self.oracle
        by_value = qa_sort_key(oracle)
        items = sorted((Interval(as_qalpha(a), as_qalpha(b))
                        for a, b in intervals),
                       key=lambda iv: by_value(iv.lo))
        merged: List[Interval] = []
        for iv in items:
            if qa_sign(iv.hi - iv.lo, oracle) <= 0:
                continue
            if merged and qa_sign(iv.lo - merged[-1].hi, oracle) <= 0:
                last = merged[-1]
                if qa_sign(iv.hi - last.hi, oracle) > 0:
                    merged[-1] = Interval(last.lo, iv.hi)
            else:
                merged.append(iv)
        return merged

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    @property
    def measure(self) -> QAlpha:
        total = QAlpha()
        for iv in self.intervals:
            total = total + iv.length
        return total

    def union(self, other: 'IntervalUnion') -> 'IntervalUnion':
        return IntervalUnion(self.intervals + other.intervals, self.oracle)

    def difference(self, other: 'IntervalUnion') -> 'IntervalUnion':
        """Points of self outside other, in one sweep over both lists."""
        oracle = self.oracle
        theirs = other.intervals
        result: List[Interval] = []
        j = 0
        for iv in self.intervals:
            lo, hi = iv
            while j < len(theirs) and qa_sign(theirs[j].hi - lo, oracle) <= 0:
                j += 1
            k = j
            while k < len(theirs) and qa_sign(hi - theirs[k].lo, oracle) > 0:
                cut = theirs[k]
                if qa_sign(cut.lo - lo, oracle) > 0:
                    result.append(Interval(lo, cut.lo))
                if qa_sign(cut.hi - lo, oracle) > 0:
                    lo = cut.hi
                if qa_sign(hi - lo, oracle) <= 0:
                    break
                k += 1
            if qa_sign(hi - lo, oracle) > 0:
                result.append(Interval(lo, hi))
        return IntervalUnion(result, oracle)

    def image(self, T: Iet) -> 'IntervalUnion':
        result: List[Interval] = []
        for iv in self.intervals:
            result.extend(interval_image(T, iv))
        return IntervalUnion(result, self.oracle)

    def contains(self, x: QAlphaLike) -> bool:
        x = as_qalpha(x)
        return any(qa_sign(x - iv.lo, self.oracle) >= 0
                   and qa_sign(iv.hi - x, self.oracle) > 0
                   for iv in self.intervals)

    def issubset(self, other: 'IntervalUnion') -> bool:
        oracle = self.oracle
        for iv in self.intervals:
            if not any(qa_sign(iv.lo - big.lo, oracle) >= 0
                       and qa_sign(big.hi - iv.hi, oracle) >= 0
                       for big in other.intervals):
                return False
        return True

    def is_full(self, T: Iet) -> bool:
        return (len(self.intervals) == 1
                and qa_equal(self.intervals[0].lo, 0, self.oracle)
                and qa_equal(self.intervals[0].hi, T.total_length,
                             self.oracle))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        if len(self.intervals) != len(other.intervals):
            return False
        return all(qa_equal(a.lo, b.lo, self.oracle)
                   and qa_equal(a.hi, b.hi, self.oracle)
                   for a, b in zip(self.intervals, other.intervals))

    def __hash__(self) -> int:
        return hash(len(self.intervals))

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " u ".join(str(iv) for iv in self.intervals)

    def __repr__(self) -> str:
        return f"IntervalUnion({self})"
