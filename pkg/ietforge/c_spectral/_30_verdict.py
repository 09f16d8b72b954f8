# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import logging
from typing import List, NamedTuple, Optional, Tuple

from ietforge._common import IetForgeError, VerificationFailed
from ietforge.b_core import Iet
from ietforge.c_spectral._10_affine import AffineEigenStructure, AffineProof, \
    detect_affine_structure, verify_affine_eigen
from ietforge.c_spectral._20_cycles import IntervalCycle, StalledCandidate, \
    find_interval_cycles, verify_interval_cycle

logger = logging.getLogger(__name__)

NOT_WEAKLY_MIXING = "not-topologically-weakly-mixing"
NO_EIGENFUNCTION_FOUND = "no-continuous-eigenfunction-found"
INCONCLUSIVE = "inconclusive"


class WeakMixingVerdict(NamedTuple):
    affine: Optional[AffineEigenStructure]
    proof: Optional[AffineProof]
    rational_cycles: Tuple[IntervalCycle, ...]
    exhausted: Tuple[StalledCandidate, ...]
    verdict: str
    notes: Tuple[str, ...]


def weak_mixing_report(T: Iet, max_period: Optional[int] = None,
                       max_span: int = 2) -> WeakMixingVerdict:
    """Affine detection plus the interval-cycle search over all
    discontinuities. Only an affine witness (a continuous eigenfunction)
    decides the verdict; cycles give step eigenfunctions and are listed
    apart."""
    if max_period is None:
        max_period = 2 * T.m
    notes: List[str] = []

    affine: Optional[AffineEigenStructure] = None
    proof: Optional[AffineProof] = None
    failed = False
    try:
        affine = detect_affine_structure(T)
        if affine is not None:
            proof = verify_affine_eigen(T, affine)
    except IetForgeError as e:
        logger.info("Affine detection stopped: %s", e)
        notes.append(e.diagnostic())
        affine = None
        proof = None
        failed = True

    cycles: Tuple[IntervalCycle, ...] = ()
    exhausted: Tuple[StalledCandidate, ...] = ()
    try:
        search = find_interval_cycles(T, T.discontinuities, max_period,
                                      max_span=max_span)
        verified = []
        for cycle in search.cycles:
            try:
                verify_interval_cycle(T, cycle)
            except VerificationFailed as e:
                notes.append(e.diagnostic())
                continue
            verified.append(cycle)
        cycles = tuple(verified)
        exhausted = search.exhausted
    except IetForgeError as e:
        logger.info("Cycle search stopped: %s", e)
        notes.append(e.diagnostic())

    if exhausted:
        notes.append(f"{len(exhausted)} cycle candidate(s) not followed to "
                     f"the end (max_period {max_period})")

    if proof is not None:
        verdict = NOT_WEAKLY_MIXING
    elif failed:
        verdict = INCONCLUSIVE
    else:
        verdict = NO_EIGENFUNCTION_FOUND
    return WeakMixingVerdict(affine, proof, cycles, exhausted, verdict,
                             tuple(notes))
