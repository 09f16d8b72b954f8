# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import logging
from typing import List, NamedTuple, Optional, Tuple

from ietforge._common import VerificationFailed
from ietforge.b_core import Iet, Interval, IntervalUnion

logger = logging.getLogger(__name__)


class UnionSearch(NamedTuple):
    """`union` is an invariant proper subset of [0, r) grown from the
    interval `seed` of T, or None. `exhausted` lists the seeds whose
    growth hit a budget."""
    union: Optional[IntervalUnion]
    seed: Optional[int]
    steps: int
    exhausted: Tuple[int, ...]
    full_seeds: Tuple[int, ...]


def _grow(T: Iet, seed: IntervalUnion, max_pieces: int, max_steps: int,
          full_seeds: List[IntervalUnion]) -> Tuple[Optional[IntervalUnion],
                                                    int]:
    """Forward closure U, U u T(U), ... of the seed. Returns (closure, steps)
    or (None, steps) when a budget runs out.

    Only the part added by the previous step is imaged: the image of the
    older part already lies in the union."""
    current = seed
    frontier = seed
    for step in range(1, max_steps + 1):
        added = frontier.image(T).difference(current)
        if not len(added):
            return current, step
        current = current.union(added)
        if len(current) > max_pieces:
            return None, step
        if any(known.issubset(current) for known in full_seeds):
            return IntervalUnion([Interval(T.breakpoints[0], T.total_length)],
                                 T.oracle), step
        frontier = added
    return None, max_steps


def invariant_union_search(T: Iet, max_pieces: int,
                           max_steps: int) -> UnionSearch:
    """Grows every interval of T to its forward closure. The first closure
    that is not all of [0, r) is an invariant union, so T is not minimal."""
    oracle = T.oracle
    full_seeds: List[IntervalUnion] = []
    full_indices: List[int] = []
    exhausted: List[int] = []
    for i in range(1, T.m + 1):
        seed = IntervalUnion([Interval(*T.interval(i))], oracle)
        closure, steps = _grow(T, seed, max_pieces, max_steps, full_seeds)
        if closure is None:
            logger.debug("Seed %d exhausted after %d steps", i, steps)
            exhausted.append(i)
            continue
        if closure.is_full(T):
            full_seeds.append(seed)
            full_indices.append(i)
            continue
        if closure.image(T) != closure:
            raise VerificationFailed(i, f"T({closure}) differs from {closure}")
        logger.info("Invariant union from interval %d: %s", i, closure)
        return UnionSearch(closure, i, steps, tuple(exhausted),
                           tuple(full_indices))
    return UnionSearch(None, None, 0, tuple(exhausted),
                       tuple(full_indices))

