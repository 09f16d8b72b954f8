from ._10_affine import AffineEigenStructure, AffineProof, \
    detect_affine_structure, verify_affine_eigen, ratio_of
from ._20_cycles import IntervalCycle, StalledCandidate, CycleSearch, \
    find_interval_cycles, verify_interval_cycle
from ._30_verdict import WeakMixingVerdict, weak_mixing_report, \
    NOT_WEAKLY_MIXING, NO_EIGENFUNCTION_FOUND, INCONCLUSIVE
