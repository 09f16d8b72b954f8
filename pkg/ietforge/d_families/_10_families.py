# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Named constructions.

Every builder checks its parameter range with the oracle of `a` and
returns an `Iet`. `build_family` adds the stated eigen-witness of the
construction and the chart it lives on.
"""

from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Union

from ietforge._common import FIRST_ROUND_BITS, IetForgeError, \
    ParameterOutOfRange, SpecSemanticError
from ietforge.a_combinatorics import Permutation, parse_permutation
from ietforge.a_numeric import AlphaOracle, NoAlpha, QAlpha, Sign, \
    qa_integer_quotient, qa_sign
from ietforge.b_core import Iet, build_iet, check_same_universe, compose, \
    invert, rescale
from ietforge.c_spectral import AffineEigenStructure

NATIVE = "native"
UNIT = "unit"

ALPHA = QAlpha.alpha()


def _require_alpha_between(oracle: AlphaOracle, lo: Fraction, hi: Fraction,
                           family: str) -> None:
    if isinstance(oracle, NoAlpha):
        raise ParameterOutOfRange(f"{family} needs a declared alpha")
    where = f"alpha = {oracle.describe()} is not inside ({lo}, {hi})"
    enc = oracle.enclosure(FIRST_ROUND_BITS)
    if lo < enc.lo and enc.hi < hi:
        return
    try:
        inside = qa_sign(ALPHA - lo, oracle) == Sign.POSITIVE \
                 and qa_sign(hi - ALPHA, oracle) == Sign.POSITIVE
    except IetForgeError as e:
        raise ParameterOutOfRange(f"{where}: {e}")
    if not inside:
        raise ParameterOutOfRange(where)


def rotation(oracle: AlphaOracle) -> Iet:
    """x -> x + a mod 1 as the exchange of [0, 1 - a) and [1 - a, 1)."""
    _require_alpha_between(oracle, Fraction(0), Fraction(1), "rotation")
    return build_iet(Permutation([2, 1]), [1 - ALPHA, ALPHA], oracle)


def twisted_reversal(m: int, oracle: AlphaOracle) -> Iet:
    """The m intervals (1/(m-1), ..., 1/(m-1), 1/(m-1) - a, a) of [0, 1)
    under pi(i) = m - i for i <= m - 2, pi(m-1) = m, pi(m) = 1."""
    if m <= 3:
        raise ParameterOutOfRange(f"m = {m}: twisted_reversal needs m > 3")
    unit = Fraction(1, m - 1)
    _require_alpha_between(oracle, Fraction(0), unit, "twisted_reversal")
    images = [m - i for i in range(1, m - 1)] + [m, 1]
    lengths = [QAlpha(unit)] * (m - 2) + [unit - ALPHA, ALPHA]
    return build_iet(Permutation(images), lengths, oracle)


def resolve_sigma(sigma: Union[str, Permutation], n: int) -> Permutation:
    """`cycle` (2 3 ... n 1), `reversal`, `identity` or a one-line
    permutation `[..]` of size n."""
    if isinstance(sigma, Permutation):
        result = sigma
    elif sigma == "cycle":
        result = Permutation.shift_cycle(n)
    elif sigma == "reversal":
        result = Permutation.reversal(n)
    elif sigma == "identity":
        result = Permutation.identity(n)
    else:
        result = parse_permutation(sigma)
    if result.size != n:
        raise SpecSemanticError(
            f"sigma = {result} does not act on 1..{n}")
    return result


def block_swap(n: int, sigma: Union[str, Permutation], oracle: AlphaOracle,
               chart: str = NATIVE) -> Iet:
    """2n intervals of [0, n): each block [i-1, i) is cut at i-1+a and
    moved to the block sigma(i) with its two halves swapped.

        x + 1 - a + sigma(i) - i   on [i-1, i-1+a)
        x - a + sigma(i) - i       on [i-1+a, i)

    With chart `unit` the result is rescaled to [0, 1).
    """
    if n < 1:
        raise ParameterOutOfRange(f"n = {n}: block_swap needs n >= 1")
    if chart not in (NATIVE, UNIT):
        raise ParameterOutOfRange(f"Unknown chart: {chart}")
    sigma = resolve_sigma(sigma, n)
    _require_alpha_between(oracle, Fraction(0), Fraction(1), "block_swap")
    images: List[int] = []
    lengths: List[QAlpha] = []
    for i in range(1, n + 1):
        images.extend([2 * sigma(i), 2 * sigma(i) - 1])
        lengths.extend([ALPHA, 1 - ALPHA])
    result = build_iet(Permutation(images), lengths, oracle)
    if chart == UNIT:
        result = rescale(result, Fraction(1, n))
    return result


def half_block_swap(oracle: AlphaOracle) -> Iet:
    """lambda = (a, 1/2 - a, a, 1/2 - a), pi = (4 3 2 1) on [0, 1)."""
    _require_alpha_between(oracle, Fraction(0), Fraction(1, 2),
                           "half_block_swap")
    half = Fraction(1, 2)
    return build_iet(Permutation([4, 3, 2, 1]),
                     [ALPHA, half - ALPHA, ALPHA, half - ALPHA], oracle)


def conjugated_rotation(oracle: AlphaOracle, h: Iet) -> Iet:
    """h o R_a o h^-1 for an exchange h of [0, 1). The result has at most
    twice as many intervals as h."""
    if h.total_length != 1:
        raise ParameterOutOfRange(
            f"h acts on [0, {h.total_length}), not on [0, 1)")
    if isinstance(h.oracle, NoAlpha):
        h = build_iet(h.perm, h.lengths, oracle)
    check_same_universe(oracle, h.oracle)
    return compose(h, compose(rotation(oracle), invert(h)))


FAMILY_NAMES = ("rotation", "twisted_reversal", "block_swap",
                "half_block_swap", "conjugated_rotation")

_ALIASES = {"conj_rot": "conjugated_rotation",
            "thm14": "twisted_reversal",
            "thm15": "block_swap",
            "n2_rescaled": "half_block_swap"}

# the closed form of the next-to-last translation sometimes quoted for
# twisted_reversal; the value computed from (pi, lambda) is a
_QUOTED_DELTA = "a - (3-m)/(m-1)"


def family_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in FAMILY_NAMES:
        raise SpecSemanticError(
            f"Unknown family '{name}'; known: {', '.join(FAMILY_NAMES)}")
    return key


class FamilyInstance(NamedTuple):
    name: str
    params: Tuple[Tuple[str, str], ...]
    iet: Iet
    chart: str
    witness: Optional[AffineEigenStructure]
    footnotes: Tuple[str, ...]


def _witness(T: Iet, r: QAlpha, s: QAlpha) -> AffineEigenStructure:
    p = []
    for d in T.translations:
        diff = d - r
        k = 0 if diff.is_zero() else qa_integer_quotient(diff, s)
        assert k is not None, (d, r, s)
        p.append(k)
    return AffineEigenStructure(r, s, p, T.oracle)


def _param(params: Dict[str, Any], key: str, family: str) -> Any:
    if params.get(key) is None:
        raise SpecSemanticError(f"{family} needs the parameter '{key}'")
    return params[key]


def build_family(name: str, params: Dict[str, Any],
                 oracle: AlphaOracle) -> FamilyInstance:
    """Builds a family by name. `params` may hold m, n, sigma, chart and
    h; unknown keys are ignored."""
    key = family_name(name)
    footnotes: List[str] = []
    chart = NATIVE
    witness_rs: Optional[Tuple[QAlpha, QAlpha]] = None
    used: Dict[str, str] = {}

    if key == "rotation":
        T = rotation(oracle)
        witness_rs = ALPHA, QAlpha(1)
    elif key == "twisted_reversal":
        m = int(_param(params, "m", key))
        used["m"] = str(m)
        T = twisted_reversal(m, oracle)
        witness_rs = ALPHA, QAlpha(Fraction(1, m - 1))
        computed = T.translations[m - 2]
        footnotes.append(
            f"delta_{m - 1} = {computed} is computed from (pi, lambda); the "
            f"quoted closed form {_QUOTED_DELTA} gives "
            f"{ALPHA - Fraction(3 - m, m - 1)}")
    elif key == "block_swap":
        n = int(_param(params, "n", key))
        sigma = resolve_sigma(_param(params, "sigma", key), n)
        chart = params.get("chart") or NATIVE
        used.update(n=str(n), sigma=str(sigma), chart=chart)
        T = block_swap(n, sigma, oracle, chart)
        scale = Fraction(1) if chart == NATIVE else Fraction(1, n)
        witness_rs = -ALPHA * scale, QAlpha(scale)
    elif key == "half_block_swap":
        T = half_block_swap(oracle)
        witness_rs = -ALPHA, QAlpha(Fraction(1, 2))
    else:
        h = _param(params, "h", key)
        used["h"] = f"{h.perm} {[str(x) for x in h.lengths]}"
        T = conjugated_rotation(oracle, h)

    witness = _witness(T, *witness_rs) if witness_rs is not None else None
    return FamilyInstance(key, tuple(sorted(used.items())), T, chart,
                          witness, tuple(footnotes))
