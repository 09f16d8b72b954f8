# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import bisect
from typing import List, Optional, Sequence, Tuple

from ietforge._common import LengthMismatch, MixedIrrationals, \
    NonPositiveLength, OutOfDomain, VerificationFailed
from ietforge.a_combinatorics import Permutation
from ietforge.a_numeric import AlphaOracle, QAlpha, QAlphaLike, Sign, \
    as_qalpha, qa_float, qa_sign


class Iet:
    """Interval exchange of [0, r): the interval I_i = [a_{i-1}, a_i) is
    translated by delta_i onto J_{pi(i)} = [b_{pi(i)-1}, b_{pi(i)}).

    Values are immutable; build them with `build_iet`.
    """

    __slots__ = ["oracle", "perm", "lengths", "breakpoints", "translations",
                 "image_breakpoints", "_float_breaks"]

    def __init__(self, oracle: AlphaOracle, perm: Permutation,
                 lengths: Tuple[QAlpha, ...],
                 breakpoints: Tuple[QAlpha, ...],
                 translations: Tuple[QAlpha, ...],
                 image_breakpoints: Tuple[QAlpha, ...]):
        self.oracle = oracle
        self.perm = perm
        self.lengths = lengths
        self.breakpoints = breakpoints
        self.translations = translations
        self.image_breakpoints = image_breakpoints
        self._float_breaks: Optional[List[float]] = None

    @property
    def m(self) -> int:
        return self.perm.size

    @property
    def total_length(self) -> QAlpha:
        return self.breakpoints[-1]

    @property
    def discontinuities(self) -> Tuple[QAlpha, ...]:
        """a_1 .. a_{m-1}"""
        return self.breakpoints[1:-1]

    def interval(self, i: int) -> Tuple[QAlpha, QAlpha]:
        return self.breakpoints[i - 1], self.breakpoints[i]

    def float_breaks(self) -> List[float]:
        if self._float_breaks is None:
            self._float_breaks = [qa_float(a, self.oracle)
                                  for a in self.breakpoints]
        return self._float_breaks

    def __eq__(self, other) -> bool:
        # structural; `iet_equal` compares canonical forms
        if not isinstance(other, Iet):
            return NotImplemented
        return (self.oracle == other.oracle
                and self.perm == other.perm
                and [self.oracle.normalize(x) for x in self.lengths]
                == [other.oracle.normalize(x) for x in other.lengths])

    def __hash__(self) -> int:
        return hash((self.perm,
                     tuple(self.oracle.normalize(x) for x in self.lengths)))

    def __repr__(self) -> str:
        lengths = ", ".join(f'"{x}"' for x in self.lengths)
        return f"Iet(perm={self.perm}, lengths=[{lengths}])"


def check_same_universe(*oracles: AlphaOracle) -> None:
    first = oracles[0]
    for other in oracles[1:]:
        if other != first:
            raise MixedIrrationals(
                f"a = {first.describe()} and a = {other.describe()} "
                f"cannot meet in one exchange")


def build_iet(perm: Permutation, lengths: Sequence[QAlphaLike],
              oracle: AlphaOracle) -> Iet:
    """Builds the exchange from its permutation and length vector. The
    translations follow from

        delta_i = sum_{j <= pi(i)} lambda_{pi^-1(j)} - sum_{j <= i} lambda_j
    """
    lambdas = tuple(as_qalpha(x) for x in lengths)
    m = perm.size
    if len(lambdas) != m:
        raise LengthMismatch(
            f"{len(lambdas)} length(s) for a permutation of size {m}")
    if m == 0:
        raise LengthMismatch("An exchange needs at least one interval")
    for i, lam in enumerate(lambdas, start=1):
        if qa_sign(lam, oracle) != Sign.POSITIVE:
            raise NonPositiveLength(i)

    a = [QAlpha()]
    for lam in lambdas:
        a.append(a[-1] + lam)

    inverse = perm.inverse()
    b = [QAlpha()]
    for j in range(1, m + 1):
        b.append(b[-1] + lambdas[inverse(j) - 1])

    delta = tuple(b[perm(i)] - a[i] for i in range(1, m + 1))

    if b[-1] != a[-1]:
        raise VerificationFailed(m, "Images do not tile [0, r)")
    for i in range(1, m + 1):
        d = delta[i - 1]
        if a[i - 1] + d != b[perm(i) - 1]:
            raise VerificationFailed(i)

    return Iet(oracle, perm, lambdas, tuple(a), delta, tuple(b))


def _locate_unchecked(T: Iet, x: QAlpha) -> int:
    m = T.m
    try:
        i = bisect.bisect_right(T.float_breaks(), qa_float(x, T.oracle))
    except OverflowError:
        i = (m + 1) // 2
    i = min(max(i, 1), m)
    oracle = T.oracle
    breaks = T.breakpoints
    while i > 1 and qa_sign(x - breaks[i - 1], oracle) < 0:
        i -= 1
    while i < m and qa_sign(x - breaks[i], oracle) >= 0:
        i += 1
    return i


def locate(T: Iet, x: QAlphaLike) -> int:
    """Index i (1-based) with a_{i-1} <= x < a_i."""
    x = as_qalpha(x)
    if qa_sign(x, T.oracle) < 0 \
            or qa_sign(T.total_length - x, T.oracle) <= 0:
        raise OutOfDomain(f"{x} is outside [0, {T.total_length})")
    return _locate_unchecked(T, x)


def apply(T: Iet, x: QAlphaLike) -> QAlpha:
    x = as_qalpha(x)
    return x + T.translations[locate(T, x) - 1]
