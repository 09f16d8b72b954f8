from ._10_iet import Iet, build_iet, locate, apply, check_same_universe
from ._20_algebra import Piece, pieces_of, iet_from_pieces, merge_pieces, \
    canonical, iet_equal, invert, compose, rescale, rename_alpha
from ._30_orbit import OrbitPoint, orbit, iterate
from ._40_intervals import Interval, IntervalUnion, split_at_breakpoints, \
    interval_image
