# SPDX-FileCopyrightText: (c) 2021-2022 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import logging
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import click

from ietforge._common import DEFAULT_IDOC_DEPTH, DEFAULT_MAX_ORBIT_VALUES, \
    DEFAULT_MAX_PIECES, DEFAULT_MAX_STEPS, DEFAULT_PRECISION_CAP, \
    IetForgeError, SpecSemanticError
from ietforge.a_numeric import AlphaOracle, NoAlpha, QAlpha, parse_alpha, \
    parse_qalpha
from ietforge.a_utils.dirty_file import write_text_atomic
from ietforge.b_core import Iet, build_iet, canonical, \
    check_same_universe, compose, iterate
from ietforge.c_dynamics import birkhoff_discrepancy, certified_idoc, \
    first_return, invariant_union_search, minimality_report
from ietforge.c_spectral import AffineEigenStructure, \
    verify_affine_eigen, weak_mixing_report
from ietforge.d_families import NATIVE, FamilyInstance, build_family
from ietforge.e_report import AnalysisReport, affine_section, \
    birkhoff_section, cycle_section, dumps, iet_section, idoc_section, \
    irreducible_section, minimality_section, orbit_section, provenance, \
    render_svg, return_section, union_section, verdict_section, \
    weak_mixing_section, witness_section
from ietforge.e_specfile import SpecDocument, load_spec, serialize_spec

logger = logging.getLogger(__name__)


class DiagnosticExit(SystemExit):
    """Prints `error[code]: message` to stderr and exits with the code of
    the error."""

    def __init__(self, error: IetForgeError):
        click.echo(error.diagnostic(), err=True)
        super().__init__(error.exit_code)


class Budgets(NamedTuple):
    idoc_depth: int = DEFAULT_IDOC_DEPTH
    max_period: Optional[int] = None
    max_span: int = 2
    max_pieces: int = DEFAULT_MAX_PIECES
    max_steps: int = DEFAULT_MAX_STEPS
    return_budget: Optional[int] = None
    max_orbit_values: int = DEFAULT_MAX_ORBIT_VALUES


class Source(NamedTuple):
    """Where an exchange comes from: a spec file or a family invocation
    with its command-line options."""
    spec: Optional[Path] = None
    family: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    sigma: Optional[str] = None
    alpha: Optional[str] = None
    h: Optional[Path] = None
    chart: Optional[str] = None
    allow_rational: bool = False
    assume_irrational: bool = False

    def describe(self) -> Dict[str, Any]:
        return {key: str(value) if isinstance(value, Path) else value
                for key, value in self._asdict().items()
                if value is not None and value is not False}


class Resolved(NamedTuple):
    iet: Iet
    family: Optional[FamilyInstance]

    @property
    def chart(self) -> str:
        return NATIVE if self.family is None else self.family.chart

    @property
    def footnotes(self) -> Tuple[str, ...]:
        return () if self.family is None else self.family.footnotes


def parse_cells(text: str) -> List[Tuple[QAlpha, QAlpha]]:
    """`U,V;U,V` into exact pairs."""
    return [parse_pair(item) for item in text.split(";") if item.strip()]


def parse_pair(text: str) -> Tuple[QAlpha, QAlpha]:
    parts = text.split(",")
    if len(parts) != 2:
        raise SpecSemanticError(f"Expected U,V but got '{text}'")
    return parse_qalpha(parts[0].strip()), parse_qalpha(parts[1].strip())


class Main:
    def __init__(self, precision_cap: int = DEFAULT_PRECISION_CAP):
        self.precision_cap = precision_cap

    def _load(self, path: Path, source: Source) -> SpecDocument:
        return load_spec(path,
                         allow_rational=source.allow_rational,
                         assume_irrational=source.assume_irrational,
                         max_rounds=self.precision_cap)

    def _oracle(self, source: Source,
                declared: Optional[AlphaOracle] = None) -> AlphaOracle:
        if source.alpha is not None:
            if declared is not None and not isinstance(declared, NoAlpha):
                raise SpecSemanticError(
                    "alpha is declared both in the spec and by --alpha")
            return parse_alpha(source.alpha,
                               allow_rational=source.allow_rational,
                               assume_irrational=source.assume_irrational,
                               max_rounds=self.precision_cap)
        if declared is not None:
            return declared
        return NoAlpha(self.precision_cap)

    def _family(self, name: str, params: Dict[str, Any],
                oracle: AlphaOracle, source: Source) -> FamilyInstance:
        # command-line options fill what the spec stanza leaves out
        params = dict(params)
        for key in ("m", "n", "sigma", "chart"):
            value = getattr(source, key)
            if value is not None and params.get(key) is None:
                params[key] = value
        if source.h is not None and params.get("h") is None:
            params["h"] = self._load(source.h, source).iet
        return build_family(name, params, oracle)

    def resolve(self, source: Source) -> Resolved:
        if source.spec is not None:
            doc = self._load(source.spec, source)
            if doc.iet is not None:
                if source.alpha is not None:
                    raise SpecSemanticError(
                        "--alpha applies to family stanzas only")
                return Resolved(doc.iet, None)
            assert doc.family is not None
            oracle = self._oracle(source, doc.oracle)
            instance = self._family(doc.family.name, doc.family.params,
                                    oracle, source)
            return Resolved(instance.iet, instance)
        if source.family is None:
            raise SpecSemanticError("Either a family name or --spec is needed")
        instance = self._family(source.family, {}, self._oracle(source),
                                source)
        return Resolved(instance.iet, instance)

    def _provenance(self, source: Source, T: Iet,
                    budgets: Optional[Budgets] = None) -> Dict[str, Any]:
        budget_dict = {} if budgets is None else budgets._asdict()
        budget_dict["precision_cap"] = self.precision_cap
        return provenance(source.describe(), serialize_spec(T), budget_dict)

    def run_analyze(self, source: Source, budgets: Budgets = Budgets(),
                    birkhoff_steps: Optional[int] = None,
                    birkhoff_from: str = "0") -> AnalysisReport:
        resolved = self.resolve(source)
        T = resolved.iet
        logger.info("Analyzing %r", T)

        report = AnalysisReport()
        report["provenance"] = self._provenance(source, T, budgets)
        report["iet"] = iet_section(T, resolved.chart, resolved.footnotes)
        report["irreducible"] = irreducible_section(T)

        minimality = minimality_report(T, depth=budgets.idoc_depth,
                                       max_pieces=budgets.max_pieces,
                                       max_steps=budgets.max_steps,
                                       return_budget=budgets.return_budget,
                                       max_values=budgets.max_orbit_values)
        assert minimality.idoc is not None
        report["idoc"] = idoc_section(minimality.idoc)
        report["minimality"] = minimality_section(minimality)

        weak = weak_mixing_report(T, max_period=budgets.max_period,
                                  max_span=budgets.max_span)
        report["affine_eigen"] = affine_section(weak.affine, weak.proof)
        report["family_witness"] = self._family_witness(resolved, weak.affine)
        report["rational_cycles"] = [cycle_section(c)
                                     for c in weak.rational_cycles]
        report["weak_mixing"] = weak_mixing_section(weak)
        report["verdict"] = verdict_section(minimality, weak)

        stats = None
        if birkhoff_steps is not None:
            stats = birkhoff_discrepancy(T, parse_qalpha(birkhoff_from),
                                         birkhoff_steps)
        report["birkhoff"] = birkhoff_section(stats)
        return report

    @staticmethod
    def _family_witness(resolved: Resolved,
                        detected: Optional[AffineEigenStructure]
                        ) -> Optional[Dict[str, Any]]:
        if resolved.family is None or resolved.family.witness is None:
            return None
        witness = resolved.family.witness
        proof = verify_affine_eigen(resolved.iet, witness)
        return witness_section(witness, proof, detected)

    def family(self, source: Source) -> AnalysisReport:
        resolved = self.resolve(source)
        report = AnalysisReport()
        report["provenance"] = self._provenance(source, resolved.iet)
        report["iet"] = iet_section(resolved.iet, resolved.chart,
                                    resolved.footnotes)
        report["family_witness"] = self._family_witness(resolved, None)
        return report

    def orbit(self, source: Source, x0: str, steps: int) -> Dict[str, Any]:
        T = self.resolve(source).iet
        return {"provenance": self._provenance(source, T),
                "orbit": orbit_section(T, iterate(T, parse_qalpha(x0),
                                                  steps))}

    def induce(self, source: Source, base: str,
               budget: Optional[int] = None) -> Dict[str, Any]:
        T = self.resolve(source).iet
        system = first_return(T, parse_pair(base), budget)
        return {"provenance": self._provenance(source, T),
                "first_return": return_section(system)}

    def birkhoff(self, source: Source, x0: str, steps: int,
                 cells: Optional[str] = None) -> Dict[str, Any]:
        T = self.resolve(source).iet
        cell_list = None if cells is None else parse_cells(cells)
        stats = birkhoff_discrepancy(T, parse_qalpha(x0), steps, cell_list)
        return {"provenance": self._provenance(source, T),
                "birkhoff": birkhoff_section(stats)}

    def compose(self, file_s: Path, file_t: Path,
                source: Source = Source()) -> Dict[str, Any]:
        """S o T of two spec files."""
        S = self.resolve(source._replace(spec=file_s)).iet
        T = self.resolve(source._replace(spec=file_t)).iet
        # a rational exchange joins the universe of the other one
        if isinstance(S.oracle, NoAlpha):
            S = build_iet(S.perm, S.lengths, T.oracle)
        elif isinstance(T.oracle, NoAlpha):
            T = build_iet(T.perm, T.lengths, S.oracle)
        check_same_universe(S.oracle, T.oracle)
        product = canonical(compose(S, T))
        return {"provenance": self._provenance(source, product),
                "iet": iet_section(product),
                "spec": serialize_spec(product)}

    def idoc(self, source: Source, depth: int) -> Dict[str, Any]:
        T = self.resolve(source).iet
        notes: List[str] = []
        verdict = certified_idoc(T, depth, notes)
        section = idoc_section(verdict)
        section["notes"] = notes
        return {"provenance": self._provenance(source, T), "idoc": section}

    def invariants(self, source: Source, max_pieces: int,
                   max_steps: int) -> Dict[str, Any]:
        T = self.resolve(source).iet
        search = invariant_union_search(T, max_pieces, max_steps)
        return {"provenance": self._provenance(source, T),
                "invariants": {
                    "mode": "exact",
                    "union": union_section(search.union),
                    "seed": search.seed,
                    "steps": search.steps,
                    "exhausted_seeds": list(search.exhausted),
                    "full_seeds": list(search.full_seeds),
                }}

    def render(self, source: Source) -> str:
        return render_svg(self.resolve(source).iet)

    @staticmethod
    def emit(text_or_data: Any, out: Optional[Path]) -> None:
        """Writes JSON (for dicts and reports) or text to `out`, or to
        stdout when `out` is None."""
        if isinstance(text_or_data, AnalysisReport):
            text = text_or_data.to_json()
        elif isinstance(text_or_data, str):
            text = text_or_data
        else:
            text = dumps(text_or_data)
        if out is None:
            click.echo(text, nl=False)
        else:
            write_text_atomic(Path(out), text)
            logger.info("Written %s", out)
