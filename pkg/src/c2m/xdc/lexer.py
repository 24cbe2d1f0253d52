"""Tokenizer for Xd-C (post-preprocessor C text)."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..diagnostics import LexError, Span

KEYWORDS = frozenset("""
    auto break case char const continue default do double else enum extern float
    for goto if int long register return short signed sizeof static struct switch
    typedef union unsigned void volatile while
""".split())

PUNCT = sorted("""
    ... <<= >>= -> ++ -- << >> <= >= == != && || += -= *= /= %= &= |= ^=
    + - * / % & | ^ ~ ! < > = ? : ; , . ( ) [ ] { }
""".split(), key=len, reverse=True)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, kw, int, float, char, string, punct, pp, eof
    text: str
    line: int
    col: int

    @property
    def span(self):
        return Span(self.line, self.col, self.line, self.col + len(self.text))

    def __repr__(self):
        return f"[{self.kind} {self.text}]"


_FLOAT = re.compile(r"((\d+\.\d*|\.\d+)([eE][+-]?\d+)?|\d+[eE][+-]?\d+)[fFlL]?")
_INT = re.compile(r"(0[xX][0-9a-fA-F]+|\d+)[uUlL]*")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_CHAR = re.compile(r"'(\\.|[^\\'\n])+'")
_STRING = re.compile(r'"(\\.|[^\\"\n])*"')


def tokenize(source: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    at_line_start = True
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            at_line_start = True
            continue
        if c in " \t\r\f\v":
            i += 1
            col += 1
            continue
        if source.startswith("//", i):
            j = source.find("\n", i)
            j = n if j < 0 else j
            col += j - i
            i = j
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j < 0:
                raise LexError("unterminated comment", Span(line, col))
            chunk = source[i:j + 2]
            nl = chunk.count("\n")
            if nl:
                line += nl
                col = len(chunk) - chunk.rfind("\n")
            else:
                col += len(chunk)
            i = j + 2
            continue
        if c == "#" and at_line_start:
            j = source.find("\n", i)
            j = n if j < 0 else j
            toks.append(Token("pp", source[i:j].strip(), line, col))
            col += j - i
            i = j
            continue
        at_line_start = False
        m = None
        kind = None
        if c.isdigit() or (c == "." and i + 1 < n and source[i + 1].isdigit()):
            m = _FLOAT.match(source, i)
            kind = "float"
            if not m:
                m = _INT.match(source, i)
                kind = "int"
        elif c.isalpha() or c == "_":
            m = _IDENT.match(source, i)
            kind = "kw" if m.group(0) in KEYWORDS else "ident"
        elif c == "'":
            m = _CHAR.match(source, i)
            kind = "char"
        elif c == '"':
            m = _STRING.match(source, i)
            kind = "string"
        if m:
            text = m.group(0)
            toks.append(Token(kind, text, line, col))
            i += len(text)
            col += len(text)
            continue
        for p in PUNCT:
            if source.startswith(p, i):
                toks.append(Token("punct", p, line, col))
                i += len(p)
                col += len(p)
                break
        else:
            raise LexError(f"illegal character {c!r}", Span(line, col))
    toks.append(Token("eof", "", line, col))
    return toks


_ESC = {"n": 10, "t": 9, "r": 13, "0": 0, "\\": 92, "'": 39, '"': 34, "a": 7,
        "b": 8, "f": 12, "v": 11}


def char_value(text: str) -> int:
    body = text[1:-1]
    if body.startswith("\\"):
        e = body[1:]
        if e in _ESC:
            return _ESC[e]
        if e.startswith("x"):
            return int(e[1:], 16)
        if e.isdigit():
            return int(e, 8)
        raise ValueError(text)
    if len(body) != 1:
        raise ValueError(text)
    return ord(body)
