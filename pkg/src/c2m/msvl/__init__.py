"""MSVL subset: abstract syntax, emitter and parser."""
from .ast import count_nodes
from .emit import emit
from .parser import parse_msvl

__all__ = ["emit", "parse_msvl", "count_nodes"]
