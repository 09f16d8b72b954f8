# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Minimality verdicts.

Two certified routes are tried. Keane: an irreducible permutation plus the
infinite distinct orbit condition proved by a drift certificate. Induced
rotation: the first return to a prefix [0, a_k) is an irrational rotation
whose return tower covers [0, r).
"""

import logging
from typing import List, NamedTuple, Optional, Tuple

from ietforge._common import DEFAULT_IDOC_DEPTH, DEFAULT_MAX_ORBIT_VALUES, \
    DEFAULT_MAX_PIECES, DEFAULT_MAX_STEPS, IetForgeError
from ietforge.a_combinatorics import is_irreducible
from ietforge.a_numeric import qa_equal
from ietforge.b_core import Iet
from ietforge.c_dynamics._10_idoc import CERTIFIED, FAIL, UNDECIDED, \
    DriftCertificate, IdocVerdict, IdocWitness, drift_certificate, \
    idoc_check
from ietforge.c_dynamics._20_unions import UnionSearch, \
    invariant_union_search
from ietforge.c_dynamics._30_first_return import ReturnSystem, \
    first_return, is_irrational_rotation

logger = logging.getLogger(__name__)

MINIMAL_CERTIFIED = "minimal-certified"
MINIMAL_EVIDENCE = "minimal-evidence"
NON_MINIMAL = "non-minimal"
UNKNOWN = "unknown"

BOSHERNITZAN_NOTE = ("uniquely ergodic by Boshernitzan: cited theorem "
                     "(minimal and rank 2), hypotheses machine-checked")


class MinimalityVerdict(NamedTuple):
    verdict: str
    route: Optional[str]  # "keane" or "induced-rotation"
    irreducible: bool
    idoc: Optional[IdocVerdict]
    unions: Optional[UnionSearch]
    induced: Optional[ReturnSystem]
    rank_two: bool
    annotations: Tuple[str, ...]
    notes: Tuple[str, ...]


def is_rank_two(T: Iet) -> bool:
    """The lengths span a two-dimensional space over the rationals."""
    oracle = T.oracle
    if not oracle.certified_irrational:
        return False
    vectors = [oracle.normalize(x) for x in T.lengths]
    first = vectors[0]
    return any(first.q * v.p - first.p * v.q != 0 for v in vectors[1:])


def certified_idoc(T: Iet, depth: int, notes: List[str],
                   max_values: int = DEFAULT_MAX_ORBIT_VALUES) -> IdocVerdict:
    """The drift certificate when one exists, otherwise the bounded orbit
    scan. Diagnostics of either step go to `notes`."""
    certificate: Optional[DriftCertificate] = None
    try:
        certificate = drift_certificate(T)
    except IetForgeError as e:
        notes.append(e.diagnostic())
    if certificate is not None and not certificate.certified:
        bad = next(ch for ch in certificate.checks if ch.collides)
        witness = IdocWitness("collision", bad.i, bad.j, bad.step,
                              bad.position)
        return IdocVerdict(FAIL, bad.step, witness, certificate)
    try:
        verdict = idoc_check(T, depth, max_values)
    except IetForgeError as e:
        notes.append(e.diagnostic())
        return IdocVerdict(UNDECIDED, 0, None, certificate)
    if certificate is not None and verdict.status != FAIL:
        return IdocVerdict(CERTIFIED, depth, None, certificate)
    return verdict._replace(certificate=certificate)


def _induced_rotation(T: Iet, budget: Optional[int],
                      notes: List[str]) -> Optional[ReturnSystem]:
    for k in range(1, T.m + 1):
        try:
            system = first_return(T, (0, T.breakpoints[k]), budget)
        except IetForgeError as e:
            logger.debug("No induced rotation on [0, a_%d): %s", k, e)
            continue
        if is_irrational_rotation(system.induced) \
                and qa_equal(system.swept, T.total_length, T.oracle):
            return system
    notes.append("no prefix base with an irrational induced rotation")
    return None


def minimality_report(T: Iet, depth: int = DEFAULT_IDOC_DEPTH,
                      max_pieces: int = DEFAULT_MAX_PIECES,
                      max_steps: int = DEFAULT_MAX_STEPS,
                      return_budget: Optional[int] = None,
                      max_values: int = DEFAULT_MAX_ORBIT_VALUES
                      ) -> MinimalityVerdict:
    notes: List[str] = []
    irreducible = is_irreducible(T.perm)
    rank_two = is_rank_two(T)
    idoc = certified_idoc(T, depth, notes, max_values)

    unions = invariant_union_search(T, max_pieces, max_steps)
    if unions.union is not None:
        return MinimalityVerdict(NON_MINIMAL, None, irreducible, idoc, unions,
                                 None, rank_two, (), tuple(notes))

    route: Optional[str] = None
    induced: Optional[ReturnSystem] = None
    if irreducible and idoc.status == CERTIFIED:
        route = "keane"
    else:
        induced = _induced_rotation(T, return_budget, notes)
        if induced is not None:
            route = "induced-rotation"

    if route is not None:
        verdict = MINIMAL_CERTIFIED
    elif irreducible and idoc.status not in (FAIL, UNDECIDED):
        verdict = MINIMAL_EVIDENCE
    else:
        verdict = UNKNOWN
    if not irreducible:
        notes.append("the permutation is reducible")

    annotations = (BOSHERNITZAN_NOTE,) \
        if verdict == MINIMAL_CERTIFIED and rank_two else ()
    logger.info("Minimality: %s (%s)", verdict, route)
    return MinimalityVerdict(verdict, route, irreducible, idoc, unions,
                             induced, rank_two, annotations, tuple(notes))
