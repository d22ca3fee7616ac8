"""Tokens and errors shared by the propositional and first-order parsers.

ASCII syntax::

    !      negation          &   conjunction     |   disjunction
    ->     implication       <-> biimplication
    true   false             forall x. F        exists x. F

The Unicode symbols ``¬ ∧ ∨ → ↔ ∀ ∃`` are accepted as synonyms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["Token", "ParseError", "LexError", "tokenize", "TokenStream"]


class ParseError(ValueError):
    """Malformed formula text.

    ``position`` is a 0-based character offset; ``expected`` lists what the
    parser would have accepted there.
    """

    def __init__(self, message: str, position: int, expected: Sequence[str] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class LexError(ParseError):
    """A character that does not start any token."""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


KEYWORDS = {"true": "TRUE", "false": "FALSE", "forall": "FORALL", "exists": "EXISTS"}

_SYMBOLS = [
    ("<->", "IFF"),
    ("->", "IMP"),
    ("!", "NOT"),
    ("&", "AND"),
    ("|", "OR"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
    (",", "COMMA"),
    (".", "DOT"),
    ("¬", "NOT"),
    ("∧", "AND"),
    ("∨", "OR"),
    ("→", "IMP"),
    ("↔", "IFF"),
    ("∀", "FORALL"),
    ("∃", "EXISTS"),
]

_IDENT = re.compile(r"[a-z][a-zA-Z0-9_]*")

# printable names for error messages
DESCRIBE = {
    "IDENT": "identifier",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "COMMA": "','",
    "DOT": "'.'",
    "NOT": "'!'",
    "AND": "'&'",
    "OR": "'|'",
    "IMP": "'->'",
    "IFF": "'<->'",
    "TRUE": "'true'",
    "FALSE": "'false'",
    "FORALL": "'forall'",
    "EXISTS": "'exists'",
    "EOF": "end of input",
}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _IDENT.match(text, pos)
        if m:
            word = m.group()
            tokens.append(Token(KEYWORDS.get(word, "IDENT"), word, pos))
            pos = m.end()
            continue
        for sym, kind in _SYMBOLS:
            if text.startswith(sym, pos):
                tokens.append(Token(kind, sym, pos))
                pos += len(sym)
                break
        else:
            raise LexError(f"unexpected character {ch!r}", pos)
    tokens.append(Token("EOF", "", n))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def at(self, *kinds: str) -> bool:
        return self.current.kind in kinds

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != "EOF":
            self.index += 1
        return tok

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self.fail([kind])
        return self.advance()

    def fail(self, expected: Iterable[str]):
        tok = self.current
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(f"unexpected {found}", tok.pos, [DESCRIBE.get(k, k) for k in expected])
