from ._10_qalpha import QAlpha, QAlphaLike, RationalLike, as_qalpha, \
    format_qalpha, qa_arith, \
    qa_scale, qa_integer_quotient
from ._20_oracle import AlphaOracle, Enclosure, QuadraticOracle, \
    ContinuedFractionOracle, DecimalOracle, RationalOracle, NoAlpha, \
    AffineOracle, affine_oracle
from ._30_ordering import Sign, qa_sign, qa_cmp, qa_less, qa_less_equal, \
    qa_equal, qa_sort_key, qa_float, qa_approx, qa_floor, qa_mod, qa_decimal
from ._40_literals import parse_qalpha, read_qalpha, parse_alpha, \
    read_oracle, format_oracle
