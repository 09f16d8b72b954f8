# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Translations of the form delta_i = r + p_i*s.

When every translation of T has this form with integer p_i, the function
f(x) = exp(2i*pi*x/s) satisfies f(T(x)) = exp(2i*pi*r/s) * f(x) on every
interval of T. The function is continuous, so T is not topologically
weakly mixing.
"""

import logging
import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ietforge._common import VerificationFailed
from ietforge.a_numeric import AlphaOracle, QAlpha, QAlphaLike, Sign, \
    as_qalpha, qa_approx, qa_decimal, qa_integer_quotient, qa_mod, qa_sign
from ietforge.b_core import Iet, apply

logger = logging.getLogger(__name__)


def _fraction_gcd(values: Sequence[Fraction]) -> Fraction:
    denominator = 1
    for v in values:
        denominator = denominator * v.denominator // math.gcd(
            denominator, v.denominator)
    g = 0
    for v in values:
        g = math.gcd(g, int(v * denominator))
    return Fraction(g, denominator)


def ratio_of(x: QAlpha, y: QAlpha) -> Optional[Fraction]:
    """The rational t with x = t*y, or None when x and y are not
    collinear. `y` must be nonzero."""
    if y.p != 0:
        t = x.p / y.p
    else:
        if x.p != 0:
            return None
        t = x.q / y.q
    if x.q != t * y.q:
        return None
    return t


class AffineEigenStructure:
    """A witness delta_i = r + p_i*s for all i.

    The eigenvalue is exp(2i*pi*r/s); `(r, s)` is not unique, so two
    structures are compared by `same_eigenvalue`.
    """

    __slots__ = ["r", "s", "p", "oracle"]

    def __init__(self, r: QAlphaLike, s: QAlphaLike, p: Sequence[int],
                 oracle: AlphaOracle):
        self.r = as_qalpha(r)
        self.s = as_qalpha(s)
        if self.s.is_zero():
            raise ValueError("s must be nonzero")
        self.p: Tuple[int, ...] = tuple(p)
        self.oracle = oracle

    @property
    def s_is_rational(self) -> bool:
        return self.oracle.normalize(self.s).is_rational()

    def eigen_angle(self) -> Optional[QAlpha]:
        """r/s reduced into [0, 1) as an exact value, when s is rational."""
        s = self.oracle.normalize(self.s)
        if not s.is_rational():
            return None
        return qa_mod(self.r / s.q, Fraction(1), self.oracle)

    def eigen_angle_float(self) -> float:
        angle = self.eigen_angle()
        if angle is not None:
            return float(qa_approx(angle, self.oracle))
        ratio = qa_approx(self.r, self.oracle) / qa_approx(self.s, self.oracle)
        return float(ratio - math.floor(ratio))

    def decimal(self, digits: int = 12) -> str:
        angle = self.eigen_angle()
        if angle is not None:
            return qa_decimal(angle, self.oracle, digits)
        return f"{self.eigen_angle_float():.{digits}g}"

    def eigenfunction_angle(self, x: QAlphaLike) -> Optional[QAlpha]:
        """x/s modulo 1: f(x) = exp(2i*pi * this)."""
        s = self.oracle.normalize(self.s)
        if not s.is_rational():
            return None
        return qa_mod(as_qalpha(x) / s.q, Fraction(1), self.oracle)

    def subdivide(self, k: int) -> 'AffineEigenStructure':
        """The structure (r, s/k, k*p). Its eigenvalue is the k-th power of
        this one."""
        if k <= 0:
            raise ValueError(k)
        return AffineEigenStructure(self.r, self.s / k,
                                    [k * x for x in self.p], self.oracle)

    def same_eigenvalue(self, other: 'AffineEigenStructure') -> bool:
        """True when r/s and other.r/other.s differ by an integer."""
        s1 = self.oracle.normalize(self.s)
        s2 = self.oracle.normalize(other.s)
        t = ratio_of(s1, s2)
        if t is None:
            return False
        # r1/s1 - r2/s2 = (r1 - t*r2) / s1
        diff = self.oracle.normalize(self.r - other.r * t)
        if diff.is_zero():
            return True
        return qa_integer_quotient(diff, s1) is not None

    def power_of(self, base: 'AffineEigenStructure',
                 max_power: int = 64) -> Optional[int]:
        """The smallest k with eigenvalue(self) = eigenvalue(base)^k."""
        for k in range(1, max_power + 1):
            if base.subdivide(k).same_eigenvalue(self):
                return k
        return None

    def __repr__(self) -> str:
        return (f"AffineEigenStructure(r={self.r}, s={self.s}, "
                f"p={list(self.p)})")


class AffineProof(NamedTuple):
    structure: AffineEigenStructure
    lines: Tuple[str, ...]


def detect_affine_structure(T: Iet) -> Optional[AffineEigenStructure]:
    """Finds r, s and integers p_i with delta_i = r + p_i*s, where s is the
    largest positive value that makes every p_i an integer. Returns None
    when the differences delta_i - delta_1 are not all collinear."""
    oracle = T.oracle
    deltas = [oracle.normalize(d) for d in T.translations]
    r = deltas[0]
    diffs = [d - r for d in deltas]
    nonzero = [d for d in diffs if not d.is_zero()]
    if not nonzero:
        return AffineEigenStructure(r, 1, [0] * T.m, oracle)

    direction = nonzero[0]
    ratios: List[Fraction] = []
    for d in nonzero:
        t = ratio_of(d, direction)
        if t is None:
            logger.debug("Translations span rank 2: %s and %s", direction, d)
            return None
        ratios.append(t)

    s = direction * _fraction_gcd(ratios)
    if qa_sign(s, oracle) == Sign.NEGATIVE:
        s = -s
    p = []
    for d in diffs:
        k = 0 if d.is_zero() else qa_integer_quotient(d, s)
        assert k is not None
        p.append(k)
    return AffineEigenStructure(r, s, p, oracle)


def verify_affine_eigen(T: Iet, E: AffineEigenStructure) -> AffineProof:
    """Re-checks delta_i - r = p_i*s for every interval, then checks
    f(T(x)) = exp(2i*pi*r/s)*f(x) at the left end and the midpoint of each
    interval when s is rational."""
    oracle = T.oracle
    if len(E.p) != T.m:
        raise VerificationFailed(min(len(E.p), T.m) + 1,
                                 f"{len(E.p)} coefficients for "
                                 f"{T.m} intervals")
    s = oracle.normalize(E.s)
    lines = []
    for i, (d, p_i) in enumerate(zip(T.translations, E.p), start=1):
        diff = oracle.normalize(d - E.r)
        if diff.is_zero():
            k: Optional[int] = 0
        else:
            k = qa_integer_quotient(diff, s)
        if k != p_i:
            raise VerificationFailed(
                i, f"delta_{i} - r = {diff} is not {p_i} * ({s})")
        lines.append(f"delta_{i} - r = {diff} = {p_i} * ({s})")

    angle = E.eigen_angle()
    if angle is not None:
        for i in range(1, T.m + 1):
            lo, hi = T.interval(i)
            for x in (lo, (lo + hi) / 2):
                before = E.eigenfunction_angle(x)
                after = E.eigenfunction_angle(apply(T, x))
                assert before is not None and after is not None
                shift = qa_mod(after - before - angle, Fraction(1), oracle)
                if not oracle.normalize(shift).is_zero():
                    raise VerificationFailed(
                        i, f"f(T(x)) != exp(2i*pi*r/s) f(x) at x = {x}")
        lines.append(f"f(T(x)) = exp(2i*pi*({angle})) f(x) "
                     f"at {2 * T.m} sample points")
    return AffineProof(E, tuple(lines))
