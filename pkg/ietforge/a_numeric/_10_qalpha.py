# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


from fractions import Fraction
from typing import Optional, Union

RationalLike = Union[int, Fraction]


class QAlpha:
    """Exact number `q + p*a` where `q` and `p` are rationals and `a` is the
    irrational of the session.

    Equality is coordinatewise. It agrees with equality of real numbers
    only when `a` is irrational; comparisons between QAlpha values need an
    oracle and live in the ordering module.
    """

    __slots__ = ["q", "p"]

    def __init__(self, q: RationalLike = 0, p: RationalLike = 0):
        self.q = Fraction(q)
        self.p = Fraction(p)

    @classmethod
    def _make(cls, q: Fraction, p: Fraction) -> 'QAlpha':
        # skips the Fraction conversion on hot paths
        obj = object.__new__(cls)
        obj.q = q
        obj.p = p
        return obj

    @classmethod
    def alpha(cls, coefficient: RationalLike = 1) -> 'QAlpha':
        return cls(0, coefficient)

    def is_zero(self) -> bool:
        return self.q == 0 and self.p == 0

    def is_rational(self) -> bool:
        return self.p == 0

    def __add__(self, other: 'QAlphaLike') -> 'QAlpha':
        other = as_qalpha(other)
        return QAlpha._make(self.q + other.q, self.p + other.p)

    __radd__ = __add__

    def __sub__(self, other: 'QAlphaLike') -> 'QAlpha':
        other = as_qalpha(other)
        return QAlpha._make(self.q - other.q, self.p - other.p)

    def __rsub__(self, other: 'QAlphaLike') -> 'QAlpha':
        return as_qalpha(other) - self

    def __neg__(self) -> 'QAlpha':
        return QAlpha._make(-self.q, -self.p)

    def __mul__(self, other: 'QAlphaLike') -> 'QAlpha':
        if isinstance(other, QAlpha):
            if other.p == 0:
                other = other.q
            elif self.p == 0:
                return other * self.q
            else:
                raise TypeError("The product of two irrational QAlpha values "
                                "leaves the rank-2 space")
        c = Fraction(other)
        return QAlpha._make(self.q * c, self.p * c)

    __rmul__ = __mul__

    def __truediv__(self, other: 'QAlphaLike') -> 'QAlpha':
        if isinstance(other, QAlpha):
            if other.p != 0:
                raise TypeError("Division by an irrational QAlpha")
            other = other.q
        c = Fraction(other)
        return QAlpha._make(self.q / c, self.p / c)

    def __eq__(self, other) -> bool:
        if isinstance(other, QAlpha):
            return self.q == other.q and self.p == other.p
        if isinstance(other, (int, Fraction)):
            return self.p == 0 and self.q == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        return hash((self.q, self.p))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return format_qalpha(self)

    def __repr__(self) -> str:
        return f"QAlpha('{format_qalpha(self)}')"


QAlphaLike = Union[QAlpha, int, Fraction]


def as_qalpha(x: QAlphaLike) -> QAlpha:
    if isinstance(x, QAlpha):
        return x
    return QAlpha(x)


def format_qalpha(x: QAlpha, symbol: str = "a") -> str:
    """Formats in the literal syntax accepted by `parse_qalpha`:
    `1/3 - a`, `a`, `-2*a`, `1/2 + 3/4*a`, `0`."""
    if x.p == 0:
        return str(x.q)
    magnitude = abs(x.p)
    alpha_txt = symbol if magnitude == 1 else f"{magnitude}*{symbol}"
    if x.q == 0:
        return alpha_txt if x.p > 0 else f"-{alpha_txt}"
    op = "+" if x.p > 0 else "-"
    return f"{x.q} {op} {alpha_txt}"


def qa_arith(x: QAlpha, y: QAlpha, op: str) -> QAlpha:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    raise ValueError(f"Unknown operation: {op}")


def qa_scale(x: QAlpha, c: RationalLike) -> QAlpha:
    return x * Fraction(c)


def qa_integer_quotient(x: QAlpha, s: QAlpha) -> Optional[int]:
    """Returns the integer k with x = k*s exactly, or None.

    Decided coordinatewise: both rational coordinates must divide to the
    same integer (a zero coordinate of `s` requires a zero coordinate of
    `x`)."""
    if s.is_zero():
        raise ValueError("Zero divisor")
    k = None
    for xc, sc in ((x.q, s.q), (x.p, s.p)):
        if sc == 0:
            if xc != 0:
                return None
            continue
        ratio = xc / sc
        if ratio.denominator != 1:
            return None
        if k is None:
            k = ratio.numerator
        elif k != ratio.numerator:
            return None
    assert k is not None
    return k
