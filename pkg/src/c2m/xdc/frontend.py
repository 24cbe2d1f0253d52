"""One-call front end: source text to a checked program."""
from __future__ import annotations

from dataclasses import replace

from ..diagnostics import C2MError, SubsetError, TypeCheckError
from .lexer import tokenize
from .parser import parse_program
from .subset import check_subset
from .typecheck import typecheck


def load(source: str, filename: str = "<input>"):
    """Lex, parse, subset-check and type-check. Returns (program, info).

    Raises LexError/ParseError, SubsetError (negative-list hits) or
    TypeCheckError; each carries the full diagnostic list."""
    try:
        return _load(source, filename)
    except C2MError as ex:
        ex.diagnostics = [d if d.filename != "<input>" else replace(d, filename=filename)
                          for d in ex.diagnostics]
        raise


def _load(source, filename):
    prog = parse_program(tokenize(source), filename)
    bad = check_subset(prog)
    if bad:
        raise SubsetError(bad[0].message, bad[0].span, bad[0].item, diagnostics=bad)
    info, diags = typecheck(prog)
    if diags:
        raise TypeCheckError(diags[0].message, diags[0].span, diagnostics=diags)
    return prog, info
