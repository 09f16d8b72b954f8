from ._10_report import AnalysisReport, dumps, provenance, iet_section, \
    irreducible_section, affine_section, witness_section, cycle_section, \
    weak_mixing_section, idoc_section, return_section, union_section, \
    minimality_section, verdict_section, birkhoff_section, orbit_section, \
    SCHEMA_FILE
from ._20_svg import render_svg, SvgOptions
