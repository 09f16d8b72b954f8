# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Tokens and a token cursor shared by the literal syntax, the oracle
declarations and the spec-file stanzas."""

import re
from typing import List, NamedTuple, NoReturn, Optional

from ietforge._common import SpecSyntaxError


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


END = "END"

_TOKEN_RE = re.compile(r"""
    (?P<SPACE>[ \t\r]+)
  | (?P<NEWLINE>\n)
  | (?P<COMMENT>\#[^\n]*)
  | (?P<PLUSMINUS>\+/-)
  | (?P<ELLIPSIS>\.\.\.)
  | (?P<NUMBER>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<STRING>"[^"\n]*")
  | (?P<PUNCT>[\[\]{}();,=+\-*/~:])
""", re.VERBOSE)


def tokenize(text: str, line: int = 1, col: int = 1) -> List[Token]:
    """Splits the text into tokens. Punctuation tokens use the character
    itself as the kind. The list always ends with an END token."""
    tokens: List[Token] = []
    line_start = -(col - 1)
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        tok_col = pos - line_start + 1
        if match is None:
            raise SpecSyntaxError(line, tok_col, "a token", text[pos])
        kind = match.lastgroup
        assert kind is not None
        value = match.group()
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind not in ("SPACE", "COMMENT"):
            if kind == "PUNCT":
                kind = value
            elif kind == "STRING":
                value = value[1:-1]
            tokens.append(Token(kind, value, line, tok_col))
        pos = match.end()
    tokens.append(Token(END, "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    """Cursor over tokens with the usual peek / accept / expect trio of a
    recursive-descent parser."""

    def __init__(self, text: str, line: int = 1, col: int = 1):
        self._tokens = tokenize(text, line=line, col=col)
        self._index = 0

    @property
    def current(self) -> Token:
        return self._tokens[self._index]

    def mark(self) -> int:
        return self._index

    def reset(self, mark: int) -> None:
        self._index = mark

    def at_end(self) -> bool:
        return self.current.kind == END

    def peek(self, kind: str, text: Optional[str] = None) -> bool:
        tok = self.current
        return tok.kind == kind and (text is None or tok.text == text)

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        if self.peek(kind, text):
            tok = self.current
            self._index += 1
            return tok
        return None

    def expect(self, kind: str, expected: Optional[str] = None,
               text: Optional[str] = None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            self.fail(expected or repr(text or kind))
        assert tok is not None
        return tok

    def fail(self, expected: str) -> NoReturn:
        tok = self.current
        raise SpecSyntaxError(tok.line, tok.col, expected,
                              None if tok.kind == END else tok.text)
