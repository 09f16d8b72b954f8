# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import logging
from fractions import Fraction
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Set, \
    Tuple

from ietforge._common import VerificationFailed
from ietforge.a_numeric import QAlpha, QAlphaLike, as_qalpha, qa_equal, \
    qa_sign, qa_sort_key
from ietforge.b_core import Iet, Interval, IntervalUnion, apply, \
    split_at_breakpoints

logger = logging.getLogger(__name__)


class IntervalCycle(NamedTuple):
    """Intervals with T(pieces[k]) = pieces[k+1 mod n] as sets.

    `translations[k]` lists the translations T uses on pieces[k]: a single
    one when the piece holds no discontinuity of T. The step function equal
    to exp(2i*pi*k/n) on pieces[k] is an eigenfunction with the rational
    eigenvalue exp(2i*pi/n).
    """
    pieces: Tuple[Interval, ...]
    translations: Tuple[Tuple[QAlpha, ...], ...]

    @property
    def period(self) -> int:
        return len(self.pieces)

    @property
    def eigen_fraction(self) -> Fraction:
        return Fraction(1, self.period)

    @property
    def pure_translation(self) -> bool:
        return all(len(t) == 1 for t in self.translations)

    def step_eigenfunction(self, x: QAlphaLike, oracle) -> Optional[Fraction]:
        """k/n on pieces[k]; None outside the cycle."""
        x = as_qalpha(x)
        for k, piece in enumerate(self.pieces):
            if qa_sign(x - piece.lo, oracle) >= 0 \
                    and qa_sign(piece.hi - x, oracle) > 0:
                return Fraction(k, self.period)
        return None


class StalledCandidate(NamedTuple):
    """A candidate interval whose orbit could not be followed."""
    interval: Interval
    step: int
    reason: str  # "split" or "period"


class CycleSearch(NamedTuple):
    cycles: Tuple[IntervalCycle, ...]
    exhausted: Tuple[StalledCandidate, ...]


def _cycle_key(cycle: IntervalCycle, oracle) -> FrozenSet:
    return frozenset((oracle.normalize(p.lo), oracle.normalize(p.hi))
                     for p in cycle.pieces)


def _contiguous_image(T: Iet, iv: Interval
                      ) -> Optional[Tuple[Interval, Tuple[QAlpha, ...]]]:
    """T(iv) when it is a single interval, with the translations used."""
    oracle = T.oracle
    pieces = split_at_breakpoints(T, iv)
    images = IntervalUnion(
        (Interval(p.lo + p.translation, p.hi + p.translation)
         for p in pieces), oracle)
    if len(images) != 1:
        return None
    return images.intervals[0], tuple(p.translation for p in pieces)


def _candidates(T: Iet, generators: Iterable[QAlphaLike],
                max_span: int) -> List[Interval]:
    oracle = T.oracle
    points = [QAlpha(), T.total_length]
    for g in generators:
        g = as_qalpha(g)
        if qa_sign(g, oracle) > 0 and qa_sign(T.total_length - g, oracle) > 0:
            points.append(g)
    by_value = qa_sort_key(oracle)
    points.sort(key=by_value)
    unique: List[QAlpha] = []
    for x in points:
        if not unique or not qa_equal(unique[-1], x, oracle):
            unique.append(x)
    result = []
    for span in range(1, max_span + 1):
        for j in range(len(unique) - span):
            result.append(Interval(unique[j], unique[j + span]))
    return result


def _pairwise_disjoint(pieces: Tuple[Interval, ...], oracle) -> bool:
    union = IntervalUnion(pieces, oracle)
    return qa_equal(union.measure,
                    sum((p.length for p in pieces), QAlpha()), oracle)


def find_interval_cycles(T: Iet, generators: Iterable[QAlphaLike],
                         max_period: int,
                         max_span: int = 1) -> CycleSearch:
    """Follows each interval delimited by the generators (and 0, r) forward
    while its image stays a single interval. Candidates that close within
    `max_period` steps give cycles; period 1 (invariant intervals) is not
    reported."""
    if max_period < 1:
        raise ValueError("max_period must be positive")
    oracle = T.oracle
    found: List[IntervalCycle] = []
    seen: Set[FrozenSet] = set()
    stalled: List[StalledCandidate] = []

    for candidate in _candidates(T, generators, max_span):
        pieces = [candidate]
        translations: List[Tuple[QAlpha, ...]] = []
        current = candidate
        closed = False
        for step in range(1, max_period + 1):
            image = _contiguous_image(T, current)
            if image is None:
                stalled.append(StalledCandidate(candidate, step, "split"))
                break
            current, used = image
            translations.append(used)
            if qa_equal(current.lo, candidate.lo, oracle) \
                    and qa_equal(current.hi, candidate.hi, oracle):
                closed = True
                break
            pieces.append(current)
        else:
            stalled.append(StalledCandidate(candidate, max_period, "period"))

        if not closed or len(pieces) == 1:
            continue
        cycle = IntervalCycle(tuple(pieces), tuple(translations))
        if not _pairwise_disjoint(cycle.pieces, oracle):
            continue
        key = _cycle_key(cycle, oracle)
        if key in seen:
            continue
        seen.add(key)
        logger.debug("Cycle of period %d from %s", cycle.period, candidate)
        found.append(cycle)

    by_value = qa_sort_key(oracle)
    found.sort(key=lambda c: (c.period, by_value(c.pieces[0].lo)))
    return CycleSearch(tuple(found), tuple(stalled))


def verify_interval_cycle(T: Iet, cycle: IntervalCycle) -> None:
    """Rechecks T(pieces[k]) = pieces[k+1] as sets, the endpoint and
    midpoint images, and the eigen-relation of the step function on every
    piece. Raises VerificationFailed with the 1-based piece index."""
    oracle = T.oracle
    n = cycle.period
    if not _pairwise_disjoint(cycle.pieces, oracle):
        raise VerificationFailed(1, "Cycle pieces overlap")
    for k, piece in enumerate(cycle.pieces):
        target = cycle.pieces[(k + 1) % n]
        image = IntervalUnion([piece], oracle).image(T)
        if image != IntervalUnion([target], oracle):
            raise VerificationFailed(k + 1, f"T({piece}) is {image}, "
                                            f"not {target}")
        for x in (piece.lo, (piece.lo + piece.hi) / 2):
            y = apply(T, x)
            if not IntervalUnion([target], oracle).contains(y):
                raise VerificationFailed(
                    k + 1, f"T({x}) = {y} leaves {target}")
            before = cycle.step_eigenfunction(x, oracle)
            after = cycle.step_eigenfunction(y, oracle)
            if before is None or after is None \
                    or (after - before - cycle.eigen_fraction) % 1 != 0:
                raise VerificationFailed(
                    k + 1, f"Step eigenfunction fails at x = {x}")
