# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Textual syntax of exact numbers.

QAlpha literals:   1/3 - a,  a,  1/2 + 3/4*a,  2a,  0.25
Oracle forms:      sqrt(2)/8,  (sqrt(5)-1)/2,  cf[0; 2, (1, 4)],
                   cf[0; 1, 2, ...],  ~ 0.4142135 +/- 1e-7
"""

from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ietforge._common import DEFAULT_PRECISION_CAP, FIRST_ROUND_BITS, \
    ParameterOutOfRange, \
    SpecSemanticError
from ietforge.a_numeric._10_qalpha import QAlpha
from ietforge.a_numeric._20_oracle import AlphaOracle, \
    ContinuedFractionOracle, DecimalOracle, QuadraticOracle, \
    RationalOracle, affine_oracle
from ietforge.a_numeric._30_ordering import Sign, qa_sign
from ietforge.a_utils.scanner import Token, TokenStream

ALPHA_SYMBOL = "a"


def _number(tok: Token) -> Fraction:
    return Fraction(tok.text)


def _read_rational(stream: TokenStream) -> Fraction:
    value = _number(stream.expect("NUMBER", "a number"))
    if stream.accept("/"):
        den = _number(stream.expect("NUMBER", "a denominator"))
        if den == 0:
            stream.fail("a non-zero denominator")
        value /= den
    return value


def _read_term(stream: TokenStream) -> QAlpha:
    if stream.accept("IDENT", ALPHA_SYMBOL):
        coefficient = Fraction(1)
        if stream.accept("/"):
            den = _number(stream.expect("NUMBER", "a denominator"))
            if den == 0:
                stream.fail("a non-zero denominator")
            coefficient /= den
        return QAlpha(0, coefficient)
    if not stream.peek("NUMBER"):
        stream.fail(f"a number or '{ALPHA_SYMBOL}'")
    value = _read_rational(stream)
    if stream.accept("*"):
        stream.expect("IDENT", f"'{ALPHA_SYMBOL}'", text=ALPHA_SYMBOL)
        return QAlpha(0, value)
    if stream.accept("IDENT", ALPHA_SYMBOL):
        return QAlpha(0, value)
    return QAlpha(value, 0)


def read_qalpha(stream: TokenStream) -> QAlpha:
    negative = False
    if stream.accept("-"):
        negative = True
    else:
        stream.accept("+")
    result = _read_term(stream)
    if negative:
        result = -result
    while True:
        if stream.accept("+"):
            result = result + _read_term(stream)
        elif stream.accept("-"):
            result = result - _read_term(stream)
        else:
            return result


def parse_qalpha(text: str, line: int = 1, col: int = 1) -> QAlpha:
    """Parses a literal like `1/3 - a`. Whitespace is insignificant."""
    stream = TokenStream(text, line=line, col=col)
    result = read_qalpha(stream)
    stream.expect("END", "end of the number")
    return result


##############################################################################
# oracle declarations


class _Surd:
    """u + v*sqrt(d), the values of the declaration arithmetic."""
    __slots__ = ["u", "v", "d"]

    def __init__(self, u: Fraction, v: Fraction = Fraction(0), d: int = 1):
        self.u = u
        self.v = v if d != 1 else Fraction(0)
        self.d = d if self.v != 0 else 1
        if d == 1 and v != 0:
            self.u = u + v

    def _common_d(self, other: '_Surd') -> int:
        if self.v != 0 and other.v != 0 and self.d != other.d:
            raise SpecSemanticError(
                "Only one square root radicand may appear in alpha")
        return self.d if self.v != 0 else other.d

    def add(self, other: '_Surd', sign: int = 1) -> '_Surd':
        d = self._common_d(other)
        return _Surd(self.u + sign * other.u, self.v + sign * other.v, d)

    def mul(self, other: '_Surd') -> '_Surd':
        d = self._common_d(other)
        return _Surd(self.u * other.u + self.v * other.v * d,
                     self.u * other.v + self.v * other.u, d)

    def inverse(self) -> '_Surd':
        norm = self.u * self.u - self.v * self.v * self.d
        if norm == 0:
            raise SpecSemanticError("Division by zero in alpha")
        return _Surd(self.u / norm, -self.v / norm, self.d)

    def is_rational(self) -> bool:
        return self.v == 0


class _ScaledCf:
    """shift + scale*cf[...]: continued fractions combine with rationals
    only."""
    __slots__ = ["cf", "scale", "shift"]

    def __init__(self, cf: ContinuedFractionOracle,
                 scale: Fraction = Fraction(1), shift: Fraction = Fraction(0)):
        self.cf = cf
        self.scale = scale
        self.shift = shift


_Value = Union[_Surd, _ScaledCf]


class _DeclarationParser:

    def __init__(self, stream: TokenStream, max_rounds: int):
        self.stream = stream
        self.max_rounds = max_rounds

    def _rational_of(self, value: _Value, tok: Token) -> Fraction:
        if isinstance(value, _Surd) and value.is_rational():
            return value.u
        raise SpecSemanticError(
            f"{tok.line}:{tok.col}: continued fractions combine with "
            f"rational numbers only")

    def _combine_add(self, left: _Value, right: _Value, sign: int,
                     tok: Token) -> _Value:
        if isinstance(left, _Surd) and isinstance(right, _Surd):
            return left.add(right, sign)
        if isinstance(left, _ScaledCf):
            c = self._rational_of(right, tok)
            return _ScaledCf(left.cf, left.scale, left.shift + sign * c)
        assert isinstance(right, _ScaledCf)
        c = self._rational_of(left, tok)
        return _ScaledCf(right.cf, sign * right.scale,
                         c + sign * right.shift)

    def _combine_mul(self, left: _Value, right: _Value, divide: bool,
                     tok: Token) -> _Value:
        if isinstance(left, _Surd) and isinstance(right, _Surd):
            return left.mul(right.inverse() if divide else right)
        if isinstance(left, _ScaledCf):
            c = self._rational_of(right, tok)
            if divide:
                if c == 0:
                    raise SpecSemanticError("Division by zero in alpha")
                c = 1 / c
            return _ScaledCf(left.cf, left.scale * c, left.shift * c)
        if divide:
            self._rational_of(right, tok)
        assert isinstance(right, _ScaledCf)
        c = self._rational_of(left, tok)
        return _ScaledCf(right.cf, right.scale * c, right.shift * c)

    # <EXPRESSION> -> [ '+' | '-' ] <TERM> { ( '+' | '-' ) <TERM> }*
    def expression(self) -> _Value:
        sign = 1
        if self.stream.accept("-"):
            sign = -1
        else:
            self.stream.accept("+")
        result = self.term()
        if sign < 0:
            result = self._combine_mul(result, _Surd(Fraction(-1)), False,
                                       self.stream.current)
        while True:
            tok = self.stream.current
            if self.stream.accept("+"):
                result = self._combine_add(result, self.term(), 1, tok)
            elif self.stream.accept("-"):
                result = self._combine_add(result, self.term(), -1, tok)
            else:
                return result

    # <TERM> -> <FACTOR> { ( '*' | '/' ) <FACTOR> }*
    def term(self) -> _Value:
        result = self.factor()
        while True:
            tok = self.stream.current
            if self.stream.accept("*"):
                result = self._combine_mul(result, self.factor(), False, tok)
            elif self.stream.accept("/"):
                result = self._combine_mul(result, self.factor(), True, tok)
            else:
                return result

    # <FACTOR> -> [ '-' ] <ATOM>
    def factor(self) -> _Value:
        tok = self.stream.current
        if self.stream.accept("-"):
            return self._combine_mul(self.atom(), _Surd(Fraction(-1)),
                                     False, tok)
        return self.atom()

    # <ATOM> -> NUMBER | 'sqrt' '(' <EXPRESSION> ')' | '(' <EXPRESSION> ')'
    #         | 'cf' '[' <CF> ']'
    def atom(self) -> _Value:
        stream = self.stream
        tok = stream.current
        if stream.accept("NUMBER"):
            return _Surd(_number(tok))
        if stream.accept("("):
            inner = self.expression()
            stream.expect(")", "')'")
            return inner
        if stream.accept("IDENT", "sqrt"):
            stream.expect("(", "'('")
            arg = self.expression()
            stream.expect(")", "')'")
            if not (isinstance(arg, _Surd) and arg.is_rational()):
                raise SpecSemanticError(
                    f"{tok.line}:{tok.col}: sqrt expects a rational argument")
            if arg.u <= 0:
                raise SpecSemanticError(
                    f"{tok.line}:{tok.col}: sqrt expects a positive argument")
            root = QuadraticOracle(0, 1, arg.u)
            return _Surd(root.u, root.v, root.d)
        if stream.accept("IDENT", "cf"):
            return _ScaledCf(self.continued_fraction())
        stream.fail("a number, 'sqrt', 'cf' or '('")

    # <CF> -> '[' NUMBER [ ';' <ITEMS> ] ']'
    def continued_fraction(self) -> ContinuedFractionOracle:
        stream = self.stream
        stream.expect("[", "'['")
        head: List[int] = [self._integer(allow_sign=True)]
        period: Tuple[int, ...] = ()
        if stream.accept(";"):
            head_tail, period = self._cf_items()
            head.extend(head_tail)
        stream.expect("]", "']'")
        try:
            return ContinuedFractionOracle(head, period,
                                           max_rounds=self.max_rounds)
        except ValueError as e:
            raise SpecSemanticError(str(e))

    def _cf_items(self) -> Tuple[List[int], Tuple[int, ...]]:
        stream = self.stream
        items: List[int] = []
        while True:
            if stream.accept("("):
                period = [self._integer()]
                while stream.accept(","):
                    period.append(self._integer())
                stream.expect(")", "')'")
                return items, tuple(period)
            if stream.accept("ELLIPSIS"):
                # the listed tail repeats
                if not items:
                    stream.fail("partial quotients before '...'")
                return [], tuple(items)
            items.append(self._integer())
            if not stream.accept(","):
                return items, ()

    def _integer(self, allow_sign: bool = False) -> int:
        negative = allow_sign and self.stream.accept("-") is not None
        tok = self.stream.expect("NUMBER", "an integer")
        value = _number(tok)
        if value.denominator != 1:
            raise SpecSemanticError(
                f"{tok.line}:{tok.col}: expected an integer")
        return -value.numerator if negative else value.numerator


def _check_unit_range(oracle: AlphaOracle) -> None:
    enc = oracle.enclosure(FIRST_ROUND_BITS)
    if 0 < enc.lo and enc.hi < 1:
        return
    if oracle.certified_irrational or oracle.exact_value() is not None:
        alpha = QAlpha(0, 1)
        if qa_sign(alpha, oracle) == Sign.POSITIVE \
                and qa_sign(1 - alpha, oracle) == Sign.POSITIVE:
            return
    raise ParameterOutOfRange(
        f"alpha = {oracle.describe()} is not inside (0, 1)")


def read_oracle(stream: TokenStream,
                allow_rational: bool = False,
                assume_irrational: bool = False,
                max_rounds: int = DEFAULT_PRECISION_CAP) -> AlphaOracle:
    """Reads `~ c +/- e` or an exact expression for `a`. The result is
    checked to lie in (0, 1)."""
    start = stream.current
    oracle: AlphaOracle
    if stream.accept("~"):
        center = _read_rational(stream)
        stream.expect("PLUSMINUS", "'+/-'")
        radius = _read_rational(stream)
        if radius < 0:
            raise SpecSemanticError(
                f"{start.line}:{start.col}: negative enclosure radius")
        oracle = DecimalOracle(center - radius, center + radius,
                               assume_irrational=assume_irrational,
                               max_rounds=max_rounds)
    else:
        value = _DeclarationParser(stream, max_rounds).expression()
        if isinstance(value, _ScaledCf):
            oracle = affine_oracle(value.cf, value.scale, value.shift)
        else:
            oracle = QuadraticOracle(value.u, value.v, value.d,
                                     max_rounds=max_rounds)
        exact = oracle.exact_value()
        if exact is not None:
            if not allow_rational:
                raise SpecSemanticError(
                    f"{start.line}:{start.col}: alpha = {exact} is rational "
                    f"(pass --allow-rational to accept it)")
            oracle = RationalOracle(exact, max_rounds=max_rounds)
    _check_unit_range(oracle)
    return oracle


def parse_alpha(text: str,
                allow_rational: bool = False,
                assume_irrational: bool = False,
                max_rounds: int = DEFAULT_PRECISION_CAP) -> AlphaOracle:
    """Parses `sqrt(2)/2`, `alpha = sqrt(2)/2` or `alpha ~ 0.41 +/- 1e-7`."""
    stream = TokenStream(text)
    if stream.accept("IDENT", "alpha"):
        if not stream.peek("~"):
            stream.expect("=", "'=' or '~'")
    oracle = read_oracle(stream, allow_rational=allow_rational,
                         assume_irrational=assume_irrational,
                         max_rounds=max_rounds)
    stream.expect("END", "end of the declaration")
    return oracle


def format_oracle(oracle: AlphaOracle) -> Optional[str]:
    """The declaration text that `parse_alpha` reads back, or None for the
    purely rational universe."""
    txt = oracle.describe()
    return txt or None
