# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""JSON reports.

Exact values are written as strings in the literal syntax; every section
carries `"mode": "exact"` or `"mode": "float"`. Reports hold no
timestamps, so equal inputs give equal bytes.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from ietforge._common import blake2s_hex
from ietforge._constants import __version__
from ietforge.a_combinatorics import cycle_decomposition, is_irreducible
from ietforge.a_numeric import qa_decimal
from ietforge.b_core import Iet, IntervalUnion, OrbitPoint
from ietforge.c_dynamics import BirkhoffStats, IdocVerdict, \
    MinimalityVerdict, ReturnSystem, rotation_angle
from ietforge.c_spectral import AffineEigenStructure, AffineProof, \
    IntervalCycle, WeakMixingVerdict

SCHEMA_FILE = Path(__file__).parent / "report.schema.json"

EXACT = "exact"

AFFINE_CONVENTION = ("(r, s) normalized with s > 0 maximal and p_1 = 0; "
                     "eigenvalue exp(2i*pi*r/s), equal structures agree on "
                     "r/s mod 1")

ALPHA_NOTE = "numeric alpha values are chosen by the caller"


def _intervals(items) -> List[List[str]]:
    return [[str(iv.lo), str(iv.hi)] for iv in items]


def iet_section(T: Iet, chart: str = "native",
                footnotes=()) -> Dict[str, Any]:
    return {
        "mode": EXACT,
        "m": T.m,
        "r": str(T.total_length),
        "alpha": T.oracle.describe() or None,
        "alpha_kind": T.oracle.kind,
        "perm": list(T.perm.images),
        "lengths": [str(x) for x in T.lengths],
        "breakpoints": [str(x) for x in T.breakpoints],
        "translations": [str(x) for x in T.translations],
        "image_breakpoints": [str(x) for x in T.image_breakpoints],
        "chart": chart,
        "footnotes": list(footnotes),
    }


def irreducible_section(T: Iet) -> Dict[str, Any]:
    return {"mode": EXACT, "irreducible": is_irreducible(T.perm),
            "cycles": [list(c) for c in cycle_decomposition(T.perm)]}


def affine_section(E: Optional[AffineEigenStructure],
                   proof: Optional[AffineProof] = None
                   ) -> Optional[Dict[str, Any]]:
    if E is None:
        return None
    angle = E.eigen_angle()
    return {
        "mode": EXACT,
        "r": str(E.r),
        "s": str(E.s),
        "p": list(E.p),
        "eigenvalue": "exp(2i*pi*r/s)",
        "angle": None if angle is None else str(angle),
        "angle_decimal": E.decimal(),
        "eigenfunction": "exp(2i*pi*x/s)",
        "verified": proof is not None,
        "proof": [] if proof is None else list(proof.lines),
        "convention": AFFINE_CONVENTION,
    }


def witness_section(witness: Optional[AffineEigenStructure],
                    proof: Optional[AffineProof],
                    detected: Optional[AffineEigenStructure]
                    ) -> Optional[Dict[str, Any]]:
    """The eigen-witness stated with a family, verified against T, and its
    relation to the detected structure."""
    section = affine_section(witness, proof)
    if section is None:
        return None
    section["power_of_detected"] = None if detected is None \
        else witness.power_of(detected)
    return section


def cycle_section(cycle: IntervalCycle) -> Dict[str, Any]:
    return {
        "mode": EXACT,
        "period": cycle.period,
        "eigenvalue": f"exp(2i*pi*1/{cycle.period})",
        "fraction": str(cycle.eigen_fraction),
        "pieces": _intervals(cycle.pieces),
        "pure_translation": cycle.pure_translation,
    }


def weak_mixing_section(v: WeakMixingVerdict) -> Dict[str, Any]:
    return {
        "mode": EXACT,
        "verdict": v.verdict,
        "exhausted_candidates": len(v.exhausted),
        "notes": list(v.notes),
    }


def idoc_section(v: IdocVerdict) -> Dict[str, Any]:
    witness = None
    if v.witness is not None:
        witness = {"kind": v.witness.kind, "i": v.witness.i,
                   "j": v.witness.j, "step": v.witness.step,
                   "value": str(v.witness.value)}
    certificate = None
    if v.certificate is not None:
        certificate = {
            "c": str(v.certificate.c),
            "certified": v.certificate.certified,
            "checks": [{"i": ch.i, "j": ch.j, "step": ch.step,
                        "position": str(ch.position),
                        "collides": ch.collides}
                       for ch in v.certificate.checks],
        }
    return {"mode": EXACT, "status": v.status, "depth": v.depth,
            "witness": witness, "certificate": certificate}


def return_section(system: ReturnSystem) -> Dict[str, Any]:
    angle = rotation_angle(system.induced)
    return {
        "mode": EXACT,
        "base": [str(system.base.lo), str(system.base.hi)],
        "branches": [{"interval": [str(b.lo), str(b.hi)],
                      "translation": str(b.translation),
                      "time": b.time} for b in system.branches],
        "induced": iet_section(system.induced),
        "rotation_angle": None if angle is None else str(angle),
        "swept": str(system.swept),
    }


def union_section(union: Optional[IntervalUnion]) -> Optional[Dict[str, Any]]:
    if union is None:
        return None
    return {"mode": EXACT, "intervals": _intervals(union),
            "measure": str(union.measure)}


def minimality_section(v: MinimalityVerdict) -> Dict[str, Any]:
    unions = v.unions
    return {
        "mode": EXACT,
        "verdict": v.verdict,
        "route": v.route,
        "irreducible": v.irreducible,
        "rank_two": v.rank_two,
        "invariant_union": union_section(
            unions.union if unions is not None else None),
        "exhausted_seeds": [] if unions is None else list(unions.exhausted),
        "induced_rotation": None if v.induced is None
        else return_section(v.induced),
        "annotations": list(v.annotations),
        "notes": list(v.notes),
    }


def verdict_section(minimality: MinimalityVerdict,
                    weak_mixing: WeakMixingVerdict) -> Dict[str, Any]:
    return {"mode": EXACT, "minimality": minimality.verdict,
            "weak_mixing": weak_mixing.verdict}


def birkhoff_section(stats: Optional[BirkhoffStats]
                     ) -> Optional[Dict[str, Any]]:
    if stats is None:
        return None
    return {
        "mode": stats.mode,
        "start": stats.start,
        "steps": stats.steps,
        "cells": _intervals(stats.cells),
        "counts": [int(x) for x in stats.counts],
        "frequencies": [float(x) for x in stats.frequencies],
        "expected": [float(x) for x in stats.expected],
        "deviations": [float(x) for x in stats.deviations],
        "max_deviation": stats.max_deviation,
    }


def orbit_section(T: Iet, point: OrbitPoint) -> Dict[str, Any]:
    return {
        "mode": EXACT,
        "start": str(point.start),
        "step": point.step,
        "position": str(point.position),
        "position_decimal": qa_decimal(point.position, T.oracle),
        "drift": str(point.drift),
        "counts": list(point.counts),
    }


def provenance(source: Dict[str, Any], canonical_input: str,
               budgets: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "tool": "ietforge",
        "version": __version__,
        "source": source,
        "budgets": budgets,
        "input_digest": blake2s_hex(canonical_input.encode("utf-8")),
        "alpha_note": ALPHA_NOTE,
    }


class AnalysisReport:
    """Sections of a report in insertion order; serialized with sorted
    keys."""

    __slots__ = ["sections"]

    def __init__(self):
        self.sections: Dict[str, Any] = {}

    def __setitem__(self, key: str, value: Any) -> None:
        self.sections[key] = value

    def __getitem__(self, key: str) -> Any:
        return self.sections[key]

    def __contains__(self, key: str) -> bool:
        return key in self.sections

    def to_json(self) -> str:
        return dumps(self.sections)


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) \
        + "\n"

