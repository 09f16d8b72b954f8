# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Enclosure oracles for the session irrational `a`.

An oracle answers one question: given a bit precision, return rationals
lo <= a <= hi. Everything else (signs, floors, ordering of breakpoints)
is decided from these enclosures by the ordering module.
"""

import itertools
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator, NamedTuple, Optional, Sequence, \
    Tuple

from ietforge._common import DEFAULT_PRECISION_CAP, FIRST_ROUND_BITS, \
    IrrationalityUnknown
from ietforge.a_numeric._10_qalpha import QAlpha, RationalLike

_EPS = 2.0 ** -52


class Enclosure(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


class AlphaOracle:
    kind = "abstract"
    certified_irrational = False
    refinable = False

    # set when irrationality is taken on the user's word, not proved
    assumed = False

    def __init__(self, max_rounds: int = DEFAULT_PRECISION_CAP):
        if max_rounds < 1:
            raise ValueError("max_rounds must be positive")
        self.max_rounds = max_rounds
        self._hint: Optional[Tuple[float, float]] = None

    def enclosure(self, bits: int) -> Enclosure:
        raise NotImplementedError

    def exact_value(self) -> Optional[Fraction]:
        """The rational value of `a` when it is rational, otherwise None."""
        return None

    def describe(self) -> str:
        raise NotImplementedError

    def key(self) -> tuple:
        raise NotImplementedError

    def normalize(self, x: QAlpha) -> QAlpha:
        """Representative used for equality and hashing. With a rational
        `a` the two coordinates collapse into one."""
        value = self.exact_value()
        if value is None or x.p == 0:
            return x
        return QAlpha(x.q + x.p * value, 0)

    def float_hint(self) -> Tuple[float, float]:
        """A float near `a` and a bound on its distance from `a`."""
        if self._hint is None:
            enc = self.enclosure(FIRST_ROUND_BITS)
            mid = (enc.lo + enc.hi) / 2
            mid_float = float(mid)
            err = float(enc.width / 2) + abs(mid_float) * _EPS
            self._hint = (mid_float, err * 2)
        return self._hint

    def with_cap(self, max_rounds: int) -> 'AlphaOracle':
        """Same number, different refinement cap."""
        clone = object.__new__(type(self))
        clone.__dict__.update(self.__dict__)
        clone.max_rounds = max_rounds
        return clone

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlphaOracle):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()!r})"


def _split_square(n: int) -> Tuple[int, int]:
    """Returns (k, rest) with n = k*k*rest and no small square dividing
    rest. Large prime squares may stay in `rest`, which only affects the
    printed form, not the value."""
    k = 1
    f = 2
    while f * f <= n and f < 100000:
        while n % (f * f) == 0:
            n //= f * f
            k *= f
        f += 1
    return k, n


def _fraction_str(x: Fraction) -> str:
    return str(x)


class QuadraticOracle(AlphaOracle):
    """a = u + v*sqrt(d) with rational u, v and a positive integer d."""
    kind = "sqrt-of-rational"
    refinable = True

    def __init__(self, u: RationalLike, v: RationalLike,
                 radicand: RationalLike,
                 max_rounds: int = DEFAULT_PRECISION_CAP):
        super().__init__(max_rounds)
        radicand = Fraction(radicand)
        if radicand <= 0:
            raise ValueError("The radicand must be positive")
        u = Fraction(u)
        # sqrt(n/m) = sqrt(n*m)/m
        v = Fraction(v) / radicand.denominator
        n = radicand.numerator * radicand.denominator
        k, n = _split_square(n)
        v *= k
        root = isqrt(n)
        if root * root == n:
            u += v * root
            v = Fraction(0)
            n = 1
        self.u = u
        self.v = v
        self.d = n

    @property
    def certified_irrational(self) -> bool:  # type: ignore
        return self.v != 0

    def exact_value(self) -> Optional[Fraction]:
        return self.u if self.v == 0 else None

    def enclosure(self, bits: int) -> Enclosure:
        if self.v == 0:
            return Enclosure(self.u, self.u)
        scale = abs(self.v)
        b = bits + (scale.numerator // scale.denominator + 1).bit_length()
        s = isqrt(self.d << (2 * b))
        unit = 1 << b
        a = self.u + self.v * Fraction(s, unit)
        c = self.u + self.v * Fraction(s + 1, unit)
        return Enclosure(min(a, c), max(a, c))

    def describe(self) -> str:
        if self.v == 0:
            return _fraction_str(self.u)
        root = f"sqrt({self.d})"
        mag = abs(self.v)
        if mag.numerator == 1:
            term = root
        else:
            term = f"{mag.numerator}*{root}"
        if mag.denominator != 1:
            term = f"{term}/{mag.denominator}"
        if self.u == 0:
            return term if self.v > 0 else f"-{term}"
        op = "+" if self.v > 0 else "-"
        return f"{self.u} {op} {term}"

    def key(self) -> tuple:
        if self.v == 0:
            return "rational", self.u
        return "sqrt", self.u, self.v, self.d


def _reduced_period(period: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(period)
    for size in range(1, n + 1):
        if n % size == 0 and period[:size] * (n // size) == period:
            return period[:size]
    return period


class ContinuedFractionOracle(AlphaOracle):
    """a = [a0; a1, a2, ...] with a finite head and an optional periodic
    tail. Consecutive convergents bracket the value."""
    kind = "continued-fraction"
    refinable = True

    def __init__(self, head: Sequence[int], period: Sequence[int] = (),
                 max_rounds: int = DEFAULT_PRECISION_CAP):
        super().__init__(max_rounds)
        head = tuple(int(t) for t in head)
        period = tuple(int(t) for t in period)
        if not head:
            raise ValueError("At least the integer part is needed")
        if any(t <= 0 for t in head[1:] + period):
            raise ValueError("Partial quotients after the first must be "
                             "positive")
        period = _reduced_period(period)
        # [.. x; (y .. x)] is the same number as [..; (x y ..)]
        while period and len(head) > 1 and head[-1] == period[-1]:
            head = head[:-1]
            period = period[-1:] + period[:-1]
        self.head = head
        self.period = period

    @property
    def certified_irrational(self) -> bool:  # type: ignore
        return bool(self.period)

    def _terms(self) -> Iterator[int]:
        yield from self.head
        if self.period:
            yield from itertools.cycle(self.period)

    def exact_value(self) -> Optional[Fraction]:
        if self.period:
            return None
        value = Fraction(self.head[-1])
        for t in reversed(self.head[:-1]):
            value = t + 1 / value
        return value

    def enclosure(self, bits: int) -> Enclosure:
        exact = self.exact_value()
        if exact is not None:
            return Enclosure(exact, exact)
        target = 1 << bits
        h_prev, h = 1, 0
        k_prev, k = 0, 1
        previous: Optional[Fraction] = None
        for t in self._terms():
            h_prev, h = h, t * h + h_prev
            k_prev, k = k, t * k + k_prev
            current = Fraction(h, k)
            if previous is not None and k_prev * k >= target:
                return Enclosure(min(previous, current),
                                 max(previous, current))
            previous = current
        raise AssertionError("unreachable for periodic expansions")

    def describe(self) -> str:
        tail = [str(t) for t in self.head[1:]]
        if self.period:
            tail.append("(" + ", ".join(str(t) for t in self.period) + ")")
        if not tail:
            return f"cf[{self.head[0]}]"
        return f"cf[{self.head[0]}; {', '.join(tail)}]"

    def key(self) -> tuple:
        exact = self.exact_value()
        if exact is not None:
            return "rational", exact
        return "cf", self.head, self.period


class DecimalOracle(AlphaOracle):
    """a known only through an enclosure [lo, hi]. Never certified
    irrational by itself; `assume_irrational` takes the user's word."""
    kind = "decimal-enclosure"

    def __init__(self, lo: RationalLike, hi: RationalLike,
                 assume_irrational: bool = False,
                 refine: Optional[Callable[[int], Enclosure]] = None,
                 max_rounds: int = DEFAULT_PRECISION_CAP,
                 source: Optional[str] = None):
        super().__init__(max_rounds)
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("Empty enclosure")
        self.lo = lo
        self.hi = hi
        self.assumed = assume_irrational
        self._refine = refine
        self.source = source

    @property
    def certified_irrational(self) -> bool:  # type: ignore
        return self.assumed

    @property
    def refinable(self) -> bool:  # type: ignore
        return self._refine is not None

    def enclosure(self, bits: int) -> Enclosure:
        if self._refine is None:
            return Enclosure(self.lo, self.hi)
        enc = self._refine(bits)
        return Enclosure(max(enc.lo, self.lo), min(enc.hi, self.hi))

    def describe(self) -> str:
        if self.source is not None:
            return self.source
        center = (self.lo + self.hi) / 2
        return f"~ {center} +/- {self.hi - center}"

    def key(self) -> tuple:
        return "decimal", self.lo, self.hi


class RationalOracle(AlphaOracle):
    """A rational `a`, accepted only for degenerate experiments."""
    kind = "rational"

    def __init__(self, value: RationalLike,
                 max_rounds: int = DEFAULT_PRECISION_CAP):
        super().__init__(max_rounds)
        self.value = Fraction(value)

    def exact_value(self) -> Optional[Fraction]:
        return self.value

    def enclosure(self, bits: int) -> Enclosure:
        return Enclosure(self.value, self.value)

    def describe(self) -> str:
        return str(self.value)

    def key(self) -> tuple:
        return "rational", self.value


class NoAlpha(AlphaOracle):
    """The universe of a purely rational IET: no irrational declared."""
    kind = "none"

    def enclosure(self, bits: int) -> Enclosure:
        raise IrrationalityUnknown("No irrational is declared")

    def describe(self) -> str:
        return ""

    def key(self) -> tuple:
        return ("none",)


class AffineOracle(AlphaOracle):
    """a' = shift + scale*a where `a` is given by the base oracle."""
    kind = "affine"

    def __init__(self, base: AlphaOracle, scale: RationalLike,
                 shift: RationalLike = 0):
        super().__init__(base.max_rounds)
        self.base = base
        self.scale = Fraction(scale)
        self.shift = Fraction(shift)
        if self.scale == 0:
            raise ValueError("Zero scale")

    @property
    def certified_irrational(self) -> bool:  # type: ignore
        return self.base.certified_irrational

    @property
    def refinable(self) -> bool:  # type: ignore
        return self.base.refinable

    @property
    def assumed(self) -> bool:  # type: ignore
        return self.base.assumed

    def exact_value(self) -> Optional[Fraction]:
        value = self.base.exact_value()
        if value is None:
            return None
        return self.shift + self.scale * value

    def enclosure(self, bits: int) -> Enclosure:
        mag = abs(self.scale)
        extra = (mag.numerator // mag.denominator + 1).bit_length()
        enc = self.base.enclosure(bits + extra)
        a = self.shift + self.scale * enc.lo
        b = self.shift + self.scale * enc.hi
        return Enclosure(min(a, b), max(a, b))

    def describe(self) -> str:
        scaled = f"{self.scale}*{self.base.describe()}"
        if self.shift == 0:
            return scaled
        return f"{self.shift} + {scaled}"

    def key(self) -> tuple:
        return "affine", self.base.key(), self.scale, self.shift


def affine_oracle(base: AlphaOracle, scale: RationalLike,
                  shift: RationalLike = 0) -> AlphaOracle:
    """The oracle of shift + scale*a, folded into the base kind when the
    kind allows it."""
    scale = Fraction(scale)
    shift = Fraction(shift)
    if scale == 1 and shift == 0:
        return base
    if isinstance(base, QuadraticOracle):
        return QuadraticOracle(shift + scale * base.u, scale * base.v,
                               base.d, base.max_rounds)
    if isinstance(base, RationalOracle):
        return RationalOracle(shift + scale * base.value, base.max_rounds)
    if isinstance(base, DecimalOracle) and not base.refinable:
        a = shift + scale * base.lo
        b = shift + scale * base.hi
        return DecimalOracle(min(a, b), max(a, b),
                             assume_irrational=base.assumed,
                             max_rounds=base.max_rounds)
    if isinstance(base, AffineOracle):
        return affine_oracle(base.base, scale * base.scale,
                             shift + scale * base.shift)
    return AffineOracle(base, scale, shift)
