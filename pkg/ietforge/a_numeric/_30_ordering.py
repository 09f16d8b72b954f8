# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Exact order on QAlpha values.

The sign of q + p*a is first guessed with floats and a conservative error
bound. When the guess is too close to call, the rational t = -q/p is
separated from `a` by refining the oracle's enclosure.
"""

import functools
import math
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Optional

from ietforge._common import FIRST_ROUND_BITS, IrrationalityUnknown, \
    PrecisionExhausted
from ietforge.a_numeric._10_qalpha import QAlpha, QAlphaLike, as_qalpha
from ietforge.a_numeric._20_oracle import AlphaOracle

_EPS = 2.0 ** -52
_TINY = 1e-300


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _sign_of(x: Fraction) -> Sign:
    if x > 0:
        return Sign.POSITIVE
    if x < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def _float_filter(x: QAlpha, oracle: AlphaOracle) -> Optional[Sign]:
    try:
        a, a_err = oracle.float_hint()
        q = float(x.q)
        p = float(x.p)
    except OverflowError:
        return None
    value = q + p * a
    bound = abs(p) * a_err + (abs(q) + abs(p * a)) * 4 * _EPS + _TINY
    if value > bound:
        return Sign.POSITIVE
    if value < -bound:
        return Sign.NEGATIVE
    return None


def _refined_sign(x: QAlpha, oracle: AlphaOracle) -> Sign:
    # q + p*a = p*(a - t)
    t = -x.q / x.p
    p_sign = _sign_of(x.p)
    bits = FIRST_ROUND_BITS
    for _ in range(oracle.max_rounds):
        enc = oracle.enclosure(bits)
        if t < enc.lo:
            return p_sign
        if t > enc.hi:
            return Sign(-p_sign)
        if not oracle.refinable:
            break
        bits *= 2
    raise PrecisionExhausted(
        f"Cannot separate {t} from a = {oracle.describe()} "
        f"within {oracle.max_rounds} refinement round(s)")


def qa_sign(x: QAlpha, oracle: AlphaOracle) -> Sign:
    if x.p == 0:
        return _sign_of(x.q)
    exact = oracle.exact_value()
    if exact is not None:
        return _sign_of(x.q + x.p * exact)
    if not oracle.certified_irrational:
        raise IrrationalityUnknown(
            f"The sign of {x} depends on a = {oracle.describe()!r}, "
            f"which is not certified irrational")
    fast = _float_filter(x, oracle)
    if fast is not None:
        return fast
    return _refined_sign(x, oracle)


def qa_cmp(x: QAlphaLike, y: QAlphaLike, oracle: AlphaOracle) -> int:
    return int(qa_sign(as_qalpha(x) - as_qalpha(y), oracle))


def qa_less(x: QAlphaLike, y: QAlphaLike, oracle: AlphaOracle) -> bool:
    return qa_cmp(x, y, oracle) < 0


def qa_less_equal(x: QAlphaLike, y: QAlphaLike, oracle: AlphaOracle) -> bool:
    return qa_cmp(x, y, oracle) <= 0


def qa_equal(x: QAlphaLike, y: QAlphaLike, oracle: AlphaOracle) -> bool:
    x = as_qalpha(x)
    y = as_qalpha(y)
    if oracle.exact_value() is None:
        return x == y
    return oracle.normalize(x) == oracle.normalize(y)


def qa_sort_key(oracle: AlphaOracle) -> Callable:
    return functools.cmp_to_key(lambda a, b: qa_cmp(a, b, oracle))


def qa_float(x: QAlpha, oracle: AlphaOracle) -> float:
    if x.p == 0:
        return float(x.q)
    a, _ = oracle.float_hint()
    return float(x.q) + float(x.p) * a


def qa_approx(x: QAlpha, oracle: AlphaOracle,
              bits: int = FIRST_ROUND_BITS) -> Fraction:
    if x.p == 0:
        return x.q
    enc = oracle.enclosure(bits)
    return x.q + x.p * (enc.lo + enc.hi) / 2


def qa_floor(x: QAlpha, oracle: AlphaOracle) -> int:
    if x.p == 0:
        return math.floor(x.q)
    k = math.floor(qa_approx(x, oracle))
    while qa_sign(x - k, oracle) < 0:
        k -= 1
    while qa_sign(x - (k + 1), oracle) >= 0:
        k += 1
    return k


def qa_mod(x: QAlpha, modulus: Fraction, oracle: AlphaOracle) -> QAlpha:
    """x reduced into [0, modulus) for a positive rational modulus."""
    return x - modulus * qa_floor(x / modulus, oracle)


def qa_decimal(x: QAlpha, oracle: AlphaOracle, digits: int = 12) -> str:
    """Decimal rendering for human readers of reports."""
    bits = max(FIRST_ROUND_BITS, digits * 4 + 16)
    try:
        value = qa_approx(x, oracle, bits)
    except IrrationalityUnknown:
        return "?"
    return f"{float(value):.{digits}g}"
