# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Orbits of the discontinuities.

The exchange satisfies the infinite distinct orbit condition when the
orbits of a_1 .. a_{m-1} are infinite and pairwise disjoint. Iterating to a
finite depth can only refute it; `drift_certificate` proves it when every
translation carries the same nonzero multiple of a.
"""

import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from ietforge._common import BudgetExhausted, DEFAULT_MAX_ORBIT_VALUES, \
    IrrationalityUnknown, VerificationFailed
from ietforge.a_numeric import QAlpha, qa_equal
from ietforge.b_core import Iet, iterate, orbit

logger = logging.getLogger(__name__)

PASS_TO_DEPTH = "pass-to-depth"
CERTIFIED = "certified"
FAIL = "fail"
UNDECIDED = "unknown"


class IdocWitness(NamedTuple):
    """T^step(a_i) = a_j. For kind "periodic" i equals j."""
    kind: str  # "periodic" or "collision"
    i: int
    j: int
    step: int
    value: QAlpha


class DriftCheck(NamedTuple):
    i: int
    j: int
    step: int
    position: QAlpha
    collides: bool


class DriftCertificate(NamedTuple):
    """All translations have a-coefficient `c`. A collision
    T^l(a_i) = a_j then needs l = (p_j - p_i)/c where p are the
    a-coefficients of the discontinuities; every such l is in `checks`."""
    c: Fraction
    checks: Tuple[DriftCheck, ...]
    certified: bool


class IdocVerdict(NamedTuple):
    status: str
    depth: int
    witness: Optional[IdocWitness] = None
    certificate: Optional[DriftCertificate] = None


def _reverify(T: Iet, w: IdocWitness) -> None:
    source = T.breakpoints[w.i]
    target = T.breakpoints[w.j]
    position = iterate(T, source, w.step).position
    if not qa_equal(position, target, T.oracle):
        raise VerificationFailed(
            w.i, f"T^{w.step}(a_{w.i}) = {position}, not {target}")


def idoc_check(T: Iet, depth: int,
               max_values: int = DEFAULT_MAX_ORBIT_VALUES) -> IdocVerdict:
    """Iterates all discontinuities in lockstep for `depth` steps, keeping
    every visited value, and stops at the first repetition."""
    if depth < 1:
        raise ValueError("depth must be positive")
    oracle = T.oracle
    m1 = T.m - 1
    if m1 * (depth + 1) > max_values:
        raise BudgetExhausted(
            f"{m1} orbits of depth {depth} exceed {max_values} stored values")

    # normalized value -> (discontinuity index, step)
    visited: Dict[QAlpha, Tuple[int, int]] = {}
    orbits = []
    for i in range(1, T.m):
        a_i = T.breakpoints[i]
        visited[oracle.normalize(a_i)] = (i, 0)
        gen = orbit(T, a_i)
        next(gen)
        orbits.append(gen)

    for step in range(1, depth + 1):
        for i, gen in enumerate(orbits, start=1):
            x, _ = next(gen)
            key = oracle.normalize(x)
            hit = visited.get(key)
            if hit is None:
                visited[key] = (i, step)
                continue
            j, earlier = hit
            # T^step(a_i) = T^earlier(a_j) with earlier <= step
            if j == i:
                witness = IdocWitness("periodic", i, i, step - earlier,
                                      T.breakpoints[i])
            else:
                witness = IdocWitness("collision", i, j, step - earlier,
                                      T.breakpoints[j])
            _reverify(T, witness)
            logger.info("idoc fails: %s", witness)
            return IdocVerdict(FAIL, step, witness)
    return IdocVerdict(PASS_TO_DEPTH, depth)


def drift_certificate(T: Iet) -> Optional[DriftCertificate]:
    """None when the a-coefficients of the translations differ or vanish.
    Raises IrrationalityUnknown when a is not certified irrational."""
    if not T.oracle.certified_irrational:
        raise IrrationalityUnknown(
            f"a = {T.oracle.describe() or '?'} is not certified irrational")
    c = T.translations[0].p
    if c == 0 or any(d.p != c for d in T.translations):
        return None

    checks: List[DriftCheck] = []
    points = T.breakpoints
    for i in range(1, T.m):
        for j in range(1, T.m):
            if i == j:
                continue
            steps = (points[j].p - points[i].p) / c
            if steps.denominator != 1 or steps <= 0:
                continue
            position = iterate(T, points[i], int(steps)).position
            checks.append(DriftCheck(i, j, int(steps), position,
                                     position == points[j]))
    certified = not any(ch.collides for ch in checks)
    return DriftCertificate(c, tuple(checks), certified)
