# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import json
import random
import re
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional

from ietforge.a_combinatorics import Permutation, is_irreducible
from ietforge.a_numeric import AlphaOracle, NoAlpha, QAlpha, parse_alpha
from ietforge.b_core import Iet, Piece, build_iet, iet_from_pieces
from ietforge.c_spectral import AffineEigenStructure
from ietforge.e_report import SCHEMA_FILE

ALPHA = QAlpha.alpha()

# irrationals inside (0, 1/2) picked for the tests
TEST_ALPHAS = ["sqrt(2)/4", "sqrt(3)/5", "(sqrt(5)-1)/4", "sqrt(2)/8",
               "sqrt(7)/6", "(3-sqrt(5))/2", "cf[0; 2, (1, 4)]"]


def oracle_of(declaration: str) -> AlphaOracle:
    return parse_alpha(declaration)


def gen_random_fraction(rnd: random.Random, max_den: int = 12) -> Fraction:
    den = rnd.randint(1, max_den)
    return Fraction(rnd.randint(1, 3 * den), den)


def gen_random_point(rnd: random.Random, hi: Fraction = Fraction(1),
                     den: int = 1000) -> Fraction:
    """A rational in [0, hi)."""
    return hi * Fraction(rnd.randrange(den), den)


def gen_random_permutation(rnd: random.Random, m: int,
                           irreducible: bool = False) -> Permutation:
    while True:
        images = list(range(1, m + 1))
        rnd.shuffle(images)
        perm = Permutation(images)
        if not irreducible or m == 1 or is_irreducible(perm):
            return perm


def gen_random_rational_lengths(rnd: random.Random, m: int,
                                total: Optional[Fraction] = None,
                                max_den: int = 12) -> List[QAlpha]:
    parts = [gen_random_fraction(rnd, max_den) for _ in range(m)]
    if total is not None:
        scale = total / sum(parts)
        parts = [x * scale for x in parts]
    return [QAlpha(x) for x in parts]


def gen_random_lengths(rnd: random.Random, m: int) -> List[QAlpha]:
    """Positive lengths mixing rationals and `a`: some a-mass moves from
    one interval to another. Positive for every a in (0, 1)."""
    lengths = gen_random_rational_lengths(rnd, m)
    if m >= 2:
        k, j = rnd.sample(range(m), 2)
        c = lengths[k].q / 2
        lengths[k] = lengths[k] - ALPHA * c
        lengths[j] = lengths[j] + ALPHA * c
    return lengths


def gen_random_iet(rnd: random.Random, oracle: AlphaOracle,
                   min_m: int = 1, max_m: int = 6,
                   irreducible: bool = False,
                   max_den: int = 12) -> Iet:
    m = rnd.randint(min_m, max_m)
    perm = gen_random_permutation(rnd, m, irreducible=irreducible)
    if isinstance(oracle, NoAlpha):
        lengths = gen_random_rational_lengths(rnd, m, max_den=max_den)
    else:
        lengths = gen_random_lengths(rnd, m)
    return build_iet(perm, lengths, oracle)


class Planted(NamedTuple):
    iet: Iet
    structure: AffineEigenStructure


def gen_planted_iet(rnd: random.Random, oracle: AlphaOracle,
                    max_blocks: int = 6, max_k: int = 50) -> Planted:
    """Blocks of lengths w_i*s (integers w_i, s = 1/k) are permuted, each
    rotated inside by t = s*a/2. Every translation is then t + p_i*s."""
    k = rnd.randint(1, max_k)
    s = Fraction(1, k)
    t = ALPHA * (s / 2)
    n = rnd.randint(1, max_blocks)
    widths = [rnd.randint(1, 4) * s for _ in range(n)]
    order = list(range(n))
    rnd.shuffle(order)

    starts = []
    position = Fraction(0)
    for w in widths:
        starts.append(position)
        position += w
    targets = [Fraction(0)] * n
    position = Fraction(0)
    for block in order:
        targets[block] = position
        position += widths[block]

    pieces = []
    p = []
    for block in range(n):
        lo, w, shift = starts[block], widths[block], targets[block] \
            - starts[block]
        cut = lo + w - t
        pieces.append(Piece(QAlpha(lo), cut, shift + t))
        pieces.append(Piece(cut, QAlpha(lo + w), shift + t - w))
        p.extend([int(shift / s), int((shift - w) / s)])
    T = iet_from_pieces(pieces, oracle)
    return Planted(T, AffineEigenStructure(t, s, p, oracle))


##############################################################################
# draft-07 checks for the report schema: the keywords the schema file uses


def load_schema() -> Dict[str, Any]:
    return json.loads(SCHEMA_FILE.read_text(encoding="utf-8"))


_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "boolean": bool,
    "null": type(None),
}


def _type_ok(value: Any, name: str) -> bool:
    if name == "integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if name == "number":
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    return isinstance(value, _TYPES[name])


def schema_errors(value: Any, schema: Dict[str, Any],
                  root: Optional[Dict[str, Any]] = None,
                  path: str = "$") -> List[str]:
    """Covers $ref to definitions, type, const, enum, minimum, pattern,
    required, properties, items, minItems and maxItems; other keywords are
    ignored."""
    root = root if root is not None else schema
    if "$ref" in schema:
        name = schema["$ref"].rsplit("/", 1)[-1]
        return schema_errors(value, root["definitions"][name], root, path)
    errors: List[str] = []
    if "type" in schema:
        types = schema["type"]
        types = types if isinstance(types, list) else [types]
        if not any(_type_ok(value, t) for t in types):
            return [f"{path}: {value!r} is not of type {types}"]
    if value is None:
        return errors
    if "const" in schema and value != schema["const"]:
        errors.append(f"{path}: {value!r} != {schema['const']!r}")
    if "enum" in schema and value not in schema["enum"]:
        errors.append(f"{path}: {value!r} not in {schema['enum']}")
    if "minimum" in schema and value < schema["minimum"]:
        errors.append(f"{path}: {value!r} < {schema['minimum']}")
    if "pattern" in schema and re.search(schema["pattern"], value) is None:
        errors.append(f"{path}: {value!r} does not match "
                      f"{schema['pattern']}")
    if isinstance(value, dict):
        for key in schema.get("required", []):
            if key not in value:
                errors.append(f"{path}: missing '{key}'")
        for key, sub in schema.get("properties", {}).items():
            if key in value:
                errors.extend(schema_errors(value[key], sub, root,
                                            f"{path}.{key}"))
    if isinstance(value, list):
        if "minItems" in schema and len(value) < schema["minItems"]:
            errors.append(f"{path}: fewer than {schema['minItems']} items")
        if "maxItems" in schema and len(value) > schema["maxItems"]:
            errors.append(f"{path}: more than {schema['maxItems']} items")
        if "items" in schema:
            for k, item in enumerate(value):
                errors.extend(schema_errors(item, schema["items"], root,
                                            f"{path}[{k}]"))
    return errors
