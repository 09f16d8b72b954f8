from ._10_idoc import IdocVerdict, IdocWitness, DriftCheck, \
    DriftCertificate, idoc_check, drift_certificate, PASS_TO_DEPTH, \
    CERTIFIED, FAIL, UNDECIDED
from ._20_unions import UnionSearch, invariant_union_search
from ._30_first_return import ReturnBranch, ReturnSystem, first_return, \
    rotation_angle, is_irrational_rotation
from ._40_birkhoff import BirkhoffStats, birkhoff_discrepancy
from ._50_minimality import MinimalityVerdict, minimality_report, \
    is_rank_two, certified_idoc, MINIMAL_CERTIFIED, MINIMAL_EVIDENCE, \
    NON_MINIMAL, UNKNOWN, BOSHERNITZAN_NOTE
