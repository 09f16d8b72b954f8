# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Inversion, composition and canonical form.

Exchanges are handled here as lists of pieces: consecutive half-open
intervals of the domain, each with its own translation. Canonical form
merges neighbours that share a translation.
"""

from fractions import Fraction
from typing import List, NamedTuple, Sequence

from ietforge._common import LengthMismatch, VerificationFailed
from ietforge.a_combinatorics import Permutation
from ietforge.a_numeric import AlphaOracle, QAlpha, RationalLike, \
    affine_oracle, qa_equal, qa_sign, qa_sort_key
from ietforge.b_core._10_iet import Iet, _locate_unchecked, build_iet, \
    check_same_universe


class Piece(NamedTuple):
    lo: QAlpha
    hi: QAlpha
    translation: QAlpha


def pieces_of(T: Iet) -> List[Piece]:
    return [Piece(T.breakpoints[i - 1], T.breakpoints[i],
                  T.translations[i - 1])
            for i in range(1, T.m + 1)]


def merge_pieces(pieces: Sequence[Piece],
                 oracle: AlphaOracle) -> List[Piece]:
    """Joins neighbours with identical translation."""
    result: List[Piece] = []
    for piece in pieces:
        if result and qa_equal(result[-1].translation, piece.translation,
                               oracle):
            last = result[-1]
            result[-1] = Piece(last.lo, piece.hi, last.translation)
        else:
            result.append(piece)
    return result


def iet_from_pieces(pieces: Sequence[Piece], oracle: AlphaOracle) -> Iet:
    """The exchange whose intervals are exactly the given consecutive
    pieces. Pieces are not merged."""
    lengths = [p.hi - p.lo for p in pieces]
    starts = [p.lo + p.translation for p in pieces]
    by_value = qa_sort_key(oracle)
    order = sorted(range(len(pieces)), key=lambda k: by_value(starts[k]))
    images = [0] * len(pieces)
    for position, k in enumerate(order, start=1):
        images[k] = position
    result = build_iet(Permutation(images), lengths, oracle)
    for i, piece in enumerate(pieces, start=1):
        if not qa_equal(result.translations[i - 1], piece.translation,
                        oracle):
            raise VerificationFailed(i, "Pieces do not tile the image")
    return result


def canonical(T: Iet) -> Iet:
    merged = merge_pieces(pieces_of(T), T.oracle)
    if len(merged) == T.m:
        return T
    return iet_from_pieces(merged, T.oracle)


def iet_equal(S: Iet, T: Iet) -> bool:
    """Equality of the maps: canonical forms agree."""
    return canonical(S) == canonical(T)


def invert(T: Iet) -> Iet:
    """T^-1: breakpoints b_0..b_m, permutation pi^-1, translations
    -delta_{pi^-1(j)}."""
    inverse = T.perm.inverse()
    lengths = [T.lengths[inverse(j) - 1] for j in range(1, T.m + 1)]
    return build_iet(inverse, lengths, T.oracle)


def compose(S: Iet, T: Iet) -> Iet:
    """S o T in canonical form. The domain is cut at the breakpoints of T
    and at the preimages under T of the breakpoints of S."""
    check_same_universe(S.oracle, T.oracle)
    oracle = T.oracle
    if not qa_equal(S.total_length, T.total_length, oracle):
        raise LengthMismatch(
            f"Cannot compose exchanges of [0, {S.total_length}) and "
            f"[0, {T.total_length})")
    inner_s = S.discontinuities
    pieces: List[Piece] = []
    for i in range(1, T.m + 1):
        lo, hi = T.interval(i)
        d = T.translations[i - 1]
        img_lo = lo + d
        img_hi = hi + d
        edges = [img_lo]
        edges.extend(c for c in inner_s
                     if qa_sign(c - img_lo, oracle) > 0
                     and qa_sign(img_hi - c, oracle) > 0)
        edges.append(img_hi)
        for e0, e1 in zip(edges, edges[1:]):
            k = _locate_unchecked(S, e0)
            pieces.append(Piece(e0 - d, e1 - d, d + S.translations[k - 1]))
    return iet_from_pieces(merge_pieces(pieces, oracle), oracle)


def rescale(T: Iet, c: RationalLike) -> Iet:
    """All coordinates multiplied by the positive rational c."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("The scale must be positive")
    return build_iet(T.perm, [x * c for x in T.lengths], T.oracle)


def rename_alpha(T: Iet, factor: RationalLike) -> Iet:
    """Rewrites T in terms of a' = factor*a. The map is unchanged; only
    the coordinates q + p*a become q + (p/factor)*a'."""
    factor = Fraction(factor)
    oracle = affine_oracle(T.oracle, factor)
    lengths = [QAlpha(x.q, x.p / factor) for x in T.lengths]
    return build_iet(T.perm, lengths, oracle)
