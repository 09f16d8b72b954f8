# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import logging
from typing import List, NamedTuple, Optional, Tuple

from ietforge._common import NoReturnWithinBudget, OutOfDomain, \
    RETURN_BUDGET_PER_INTERVAL
from ietforge.a_combinatorics import Permutation
from ietforge.a_numeric import QAlpha, QAlphaLike, as_qalpha, qa_equal, \
    qa_sign, qa_sort_key
from ietforge.b_core import Iet, Interval, Piece, iet_from_pieces, \
    merge_pieces, split_at_breakpoints
from ietforge.c_spectral import ratio_of

logger = logging.getLogger(__name__)


class ReturnBranch(NamedTuple):
    """Points of [lo, hi) come back to the base after `time` steps, moved
    by `translation`."""
    lo: QAlpha
    hi: QAlpha
    translation: QAlpha
    time: int


class ReturnSystem(NamedTuple):
    """First return to the base [u, v). `induced` acts on [0, v - u)."""
    base: Interval
    branches: Tuple[ReturnBranch, ...]
    induced: Iet

    @property
    def return_times(self) -> Tuple[int, ...]:
        return tuple(b.time for b in self.branches)

    @property
    def swept(self) -> QAlpha:
        """Sum of length * return time: the measure of the return tower."""
        total = QAlpha()
        for b in self.branches:
            total = total + (b.hi - b.lo) * b.time
        return total


class _Pending(NamedTuple):
    # [lo, hi) of the base reached [lo + shift, hi + shift) after `time`
    lo: QAlpha
    hi: QAlpha
    shift: QAlpha
    time: int


def _cut(lo: QAlpha, hi: QAlpha, points, oracle) -> List[Tuple[QAlpha,
                                                               QAlpha]]:
    edges = [lo]
    edges.extend(c for c in points
                 if qa_sign(c - lo, oracle) > 0
                 and qa_sign(hi - c, oracle) > 0)
    edges.append(hi)
    return list(zip(edges, edges[1:]))


def first_return(T: Iet, base: Tuple[QAlphaLike, QAlphaLike],
                 budget: Optional[int] = None) -> ReturnSystem:
    """Splits the base into subintervals with a common return itinerary.

    Every pending subinterval is moved by one step of T (cut at the
    discontinuities first); the parts landing inside the base are done,
    the rest move on. A part still away after `budget` steps raises
    NoReturnWithinBudget.
    """
    oracle = T.oracle
    u, v = as_qalpha(base[0]), as_qalpha(base[1])
    if qa_sign(u, oracle) < 0 or qa_sign(v - u, oracle) <= 0 \
            or qa_sign(T.total_length - v, oracle) < 0:
        raise OutOfDomain(f"[{u}, {v}) is not a subinterval of "
                          f"[0, {T.total_length})")
    if budget is None:
        budget = RETURN_BUDGET_PER_INTERVAL * T.m

    done: List[ReturnBranch] = []
    pending = [_Pending(u, v, QAlpha(), 0)]
    while pending:
        item = pending.pop()
        if item.time >= budget:
            raise NoReturnWithinBudget((item.lo, item.hi), budget)
        position = Interval(item.lo + item.shift, item.hi + item.shift)
        for piece in split_at_breakpoints(T, position):
            shift = item.shift + piece.translation
            lo = piece.lo - item.shift
            hi = piece.hi - item.shift
            for c_lo, c_hi in _cut(lo + shift, hi + shift, (u, v), oracle):
                back_lo, back_hi = c_lo - shift, c_hi - shift
                inside = qa_sign(c_lo - u, oracle) >= 0 \
                    and qa_sign(v - c_hi, oracle) >= 0
                if inside:
                    done.append(ReturnBranch(back_lo, back_hi, shift,
                                             item.time + 1))
                else:
                    pending.append(_Pending(back_lo, back_hi, shift,
                                            item.time + 1))

    by_value = qa_sort_key(oracle)
    done.sort(key=lambda b: by_value(b.lo))
    branches: List[ReturnBranch] = []
    for b in done:
        last = branches[-1] if branches else None
        if last is not None and last.time == b.time \
                and qa_equal(last.translation, b.translation, oracle):
            branches[-1] = ReturnBranch(last.lo, b.hi, last.translation,
                                        last.time)
        else:
            branches.append(b)

    pieces = merge_pieces([Piece(b.lo - u, b.hi - u, b.translation)
                           for b in branches], oracle)
    induced = iet_from_pieces(pieces, oracle)
    logger.debug("First return to [%s, %s): %d branch(es), times %s",
                 u, v, len(branches), [b.time for b in branches])
    return ReturnSystem(Interval(u, v), tuple(branches), induced)


def rotation_angle(induced: Iet) -> Optional[QAlpha]:
    """The angle of an induced map that is a rotation of [0, L): the
    translation of its first interval, or 0 for the identity."""
    if induced.m == 1:
        return QAlpha()
    if induced.m == 2 and induced.perm == Permutation([2, 1]):
        return induced.translations[0]
    return None


def is_irrational_rotation(induced: Iet) -> bool:
    """A two-interval rotation whose angle is not a rational multiple of
    the length of its circle."""
    if induced.m != 2 or induced.perm != Permutation([2, 1]):
        return False
    if not induced.oracle.certified_irrational:
        return False
    angle = induced.oracle.normalize(induced.translations[0])
    circle = induced.oracle.normalize(induced.total_length)
    return ratio_of(angle, circle) is None
