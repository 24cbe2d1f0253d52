"""Xd-C front end: lexer, parser, subset checker and type checker."""
from .lexer import tokenize
from .parser import parse_program
from .subset import check_subset
from .typecheck import check_program, typecheck
from .frontend import load

__all__ = ["load", "tokenize", "parse_program", "check_subset", "typecheck", "check_program"]
