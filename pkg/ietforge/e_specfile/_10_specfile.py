# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Spec files: an optional alpha declaration followed by one stanza.

    alpha = sqrt(2)/8
    iet { perm = [3,2,4,1]; lengths = ["1/3", "1/3", "1/3-a", "a"]; }

    alpha ~ 0.1414213562 +/- 1e-10
    family block_swap { n = 3; sigma = reversal; chart = unit; }

Grammar:

    <DOCUMENT> -> <ALPHA>? <STANZA> END
    <ALPHA>    -> 'alpha' ('=' | '~') <ORACLE> ';'?
    <STANZA>   -> 'iet' <BODY> | 'family' IDENT <BODY>
    <BODY>     -> '{' (IDENT '=' <VALUE> ';')* '}'
    <VALUE>    -> <PERM> | '[' STRING (',' STRING)* ']' | NUMBER | IDENT
                | STRING | 'iet' <BODY>
"""

from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from ietforge._common import DEFAULT_PRECISION_CAP, SpecSemanticError
from ietforge.a_combinatorics import Permutation, read_permutation
from ietforge.a_numeric import AlphaOracle, NoAlpha, QAlpha, \
    format_oracle, parse_qalpha, read_oracle
from ietforge.a_utils.scanner import Token, TokenStream
from ietforge.b_core import Iet, build_iet

STANZA_EXPECTED = "'alpha', 'iet' or 'family'"


class IetStanza(NamedTuple):
    perm: Permutation
    lengths: Tuple[QAlpha, ...]
    token: Token


class FamilyStanza(NamedTuple):
    name: str
    params: Dict[str, Any]
    token: Token


class SpecDocument(NamedTuple):
    """Exactly one of `iet` and `family` is set."""
    oracle: AlphaOracle
    iet: Optional[Iet]
    family: Optional[FamilyStanza]


class _SpecParser:

    def __init__(self, text: str, allow_rational: bool,
                 assume_irrational: bool, max_rounds: int):
        self.stream = TokenStream(text)
        self.allow_rational = allow_rational
        self.assume_irrational = assume_irrational
        self.max_rounds = max_rounds

    def document(self) -> Tuple[Optional[AlphaOracle], Any]:
        # <DOCUMENT> -> <ALPHA>? <STANZA> END
        stream = self.stream
        oracle: Optional[AlphaOracle] = None
        if stream.accept("IDENT", "alpha"):
            if not stream.peek("~"):
                stream.expect("=", "'=' or '~'")
            oracle = read_oracle(stream,
                                 allow_rational=self.allow_rational,
                                 assume_irrational=self.assume_irrational,
                                 max_rounds=self.max_rounds)
            stream.accept(";")
        stanza = self.stanza()
        stream.expect("END", "end of the spec")
        return oracle, stanza

    def stanza(self) -> Any:
        # <STANZA> -> 'iet' <BODY> | 'family' IDENT <BODY>
        stream = self.stream
        start = stream.current
        if stream.accept("IDENT", "iet"):
            return self._iet(start, self.body())
        if stream.accept("IDENT", "family"):
            name = stream.expect("IDENT", "a family name").text
            # family names may be written with dashes: conj-rot
            while stream.accept("-"):
                name += "_" + stream.expect("IDENT", "a family name").text
            return FamilyStanza(name, self.body(), start)
        stream.fail(STANZA_EXPECTED)

    def body(self) -> Dict[str, Any]:
        # <BODY> -> '{' (IDENT '=' <VALUE> ';')* '}'
        stream = self.stream
        stream.expect("{", "'{'")
        fields: Dict[str, Any] = {}
        while not stream.accept("}"):
            key_tok = stream.expect("IDENT", "a field name or '}'")
            if key_tok.text in fields:
                raise SpecSemanticError(
                    f"{key_tok.line}:{key_tok.col}: duplicate field "
                    f"'{key_tok.text}'")
            stream.expect("=", "'='")
            fields[key_tok.text] = self.value()
            stream.expect(";", "';'")
        return fields

    def value(self) -> Any:
        stream = self.stream
        if stream.peek("["):
            mark = stream.mark()
            stream.accept("[")
            if stream.peek("STRING"):
                return self._strings()
            stream.reset(mark)
            return read_permutation(stream)
        start = stream.current
        if stream.accept("IDENT", "iet"):
            return self._iet(start, self.body())
        tok = stream.accept("NUMBER") or stream.accept("IDENT") \
            or stream.accept("STRING")
        if tok is None:
            stream.fail("a value")
        assert tok is not None
        if tok.kind == "NUMBER":
            if not tok.text.isdigit():
                raise SpecSemanticError(
                    f"{tok.line}:{tok.col}: expected an integer")
            return int(tok.text)
        return tok.text

    def _strings(self) -> List[QAlpha]:
        stream = self.stream
        result = []
        while True:
            tok = stream.expect("STRING", "a quoted number")
            result.append(parse_qalpha(tok.text, tok.line, tok.col + 1))
            if not stream.accept(","):
                break
        stream.expect("]", "']'")
        return result

    @staticmethod
    def _iet(start: Token, fields: Dict[str, Any]) -> IetStanza:
        where = f"{start.line}:{start.col}"
        unknown = set(fields) - {"perm", "lengths"}
        if unknown:
            raise SpecSemanticError(
                f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
        for key in ("perm", "lengths"):
            if key not in fields:
                raise SpecSemanticError(f"{where}: 'iet' needs '{key}'")
        perm = fields["perm"]
        lengths = fields["lengths"]
        if not isinstance(perm, Permutation):
            raise SpecSemanticError(f"{where}: 'perm' must be [i1,...,im]")
        if not isinstance(lengths, list):
            raise SpecSemanticError(
                f"{where}: 'lengths' must be a list of quoted numbers")
        if len(lengths) != perm.size:
            raise SpecSemanticError(
                f"{where}: {len(lengths)} length(s) for a permutation of "
                f"size {perm.size}")
        return IetStanza(perm, tuple(lengths), start)


def _mentions_alpha(lengths) -> bool:
    return any(not x.is_rational() for x in lengths)


def _build(stanza: IetStanza, oracle: AlphaOracle) -> Iet:
    if isinstance(oracle, NoAlpha) and _mentions_alpha(stanza.lengths):
        raise SpecSemanticError(
            f"{stanza.token.line}:{stanza.token.col}: lengths use "
            f"'a' but no alpha is declared")
    return build_iet(stanza.perm, stanza.lengths, oracle)


def parse_spec(text: str, allow_rational: bool = False,
               assume_irrational: bool = False,
               max_rounds: int = DEFAULT_PRECISION_CAP) -> SpecDocument:
    """Parses a spec file. An `iet` stanza is built at once; a family
    stanza is returned for `build_family`, with nested `iet` values of
    its fields built in the same universe."""
    parser = _SpecParser(text, allow_rational, assume_irrational, max_rounds)
    declared, stanza = parser.document()
    oracle = declared if declared is not None else NoAlpha(max_rounds)
    if isinstance(stanza, IetStanza):
        return SpecDocument(oracle, _build(stanza, oracle), None)
    params = {key: _build(value, oracle) if isinstance(value, IetStanza)
              else value
              for key, value in stanza.params.items()}
    return SpecDocument(oracle, None, stanza._replace(params=params))


def load_spec(path: Path, allow_rational: bool = False,
              assume_irrational: bool = False,
              max_rounds: int = DEFAULT_PRECISION_CAP) -> SpecDocument:
    return parse_spec(Path(path).read_text(encoding="utf-8"),
                      allow_rational=allow_rational,
                      assume_irrational=assume_irrational,
                      max_rounds=max_rounds)


def serialize_spec(T: Iet) -> str:
    """The spec text that `parse_spec` reads back into T."""
    lines = []
    declaration = format_oracle(T.oracle)
    if declaration is not None:
        if declaration.startswith("~"):
            lines.append(f"alpha {declaration}")
        else:
            lines.append(f"alpha = {declaration}")
    lengths = ", ".join(f'"{x}"' for x in T.lengths)
    lines.append("iet {")
    lines.append(f"  perm = {T.perm};")
    lines.append(f"  lengths = [{lengths}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
