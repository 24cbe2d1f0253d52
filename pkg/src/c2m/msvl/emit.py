"""Pretty printer for MSVL programs (``.m`` text).

Output is deterministic. Parentheses are inserted by precedence only, with
two exceptions that keep the text unambiguous for the parser: a logical
``and``/``or`` at the top of an assignment right-value, and an if-expression
used as an operand.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..xdc.printer import declarator, param, root_type, spell_type
from . import ast as M

PREC = {"or": 4, "and": 5, "|": 6, "^": 7, "&": 8, "=": 9, "!=": 9,
        "<": 10, ">": 10, "<=": 10, ">=": 10, "<<": 11, ">>": 11,
        "+": 12, "-": 12, "*": 13, "/": 13, "%": 13}
UNARY = 14
POSTFIX = 15
IFEXPR = 3


@dataclass(frozen=True)
class Style:
    indent: str = "    "
    # keep short if/while bodies on the head line
    inline_bodies: bool = False


def expr(e: M.MExpr) -> str:
    return _expr(e)[0]


def rvalue(e: M.MExpr) -> str:
    """Right-value in statement position (assignment source, RVal, args)."""
    s, p = _expr(e)
    if p in (PREC["and"], PREC["or"]):
        return f"({s})"
    return s


def _wrap(e, min_prec, strict=False):
    s, p = _expr(e)
    if p < min_prec or (strict and p == min_prec):
        return f"({s})"
    return s


def _callee(e):
    return _wrap(e, POSTFIX)


def _expr(e):
    if isinstance(e, M.MConst):
        text = e.text or repr(e.value)
        return text, (UNARY if text.startswith("-") else POSTFIX)
    if isinstance(e, M.MBool):
        return ("true" if e.value else "false"), POSTFIX
    if isinstance(e, M.MVar):
        return e.name, POSTFIX
    if isinstance(e, M.MIndex):
        return f"{e.name}[{expr(e.index)}]", POSTFIX
    if isinstance(e, M.MIndex2):
        return f"{e.name}[{expr(e.i)}][{expr(e.j)}]", POSTFIX
    if isinstance(e, M.MMember):
        return f"{_wrap(e.base, POSTFIX)}.{e.field}", POSTFIX
    if isinstance(e, M.MArrow):
        return f"{_wrap(e.base, POSTFIX)}->{e.field}", POSTFIX
    if isinstance(e, M.MPrev):
        s = expr(e.expr)
        for _ in range(e.depth):
            s = f"prev({s})"
        return s, POSTFIX
    if isinstance(e, M.MExtCallExpr):
        args = [rvalue(a) for a in e.args] + (["RVal"] if e.rval else [])
        return f"ext {_callee(e.callee)}({', '.join(args)})", POSTFIX
    if isinstance(e, (M.MDeref, M.MAddrOf, M.MUnop)):
        op = {M.MDeref: "*", M.MAddrOf: "&"}.get(type(e)) or e.op
        inner = _wrap(e.expr, UNARY)
        if inner[0] in "+-&*" and op in "+-&*":
            inner = f"({inner})"
        elif op == "-" and isinstance(e.expr, M.MConst):
            # a bare literal after '-' would read back as a negative constant
            inner = f"({inner})"
        return f"{op}{inner}", UNARY
    if isinstance(e, M.MCast):
        return f"({spell_type(e.to)}){_wrap(e.expr, UNARY)}", UNARY
    if isinstance(e, M.MBinop):
        p = PREC[e.op]
        return f"{_wrap(e.left, p)} {e.op} {_wrap(e.right, p, strict=True)}", p
    if isinstance(e, M.MIfExpr):
        return (f"if({expr(e.cond)})then {_wrap(e.then, 6)} else {_wrap(e.other, 6)}",
                IFEXPR)
    if isinstance(e, M.MInitList):
        return "{" + ", ".join(expr(i) for i in e.items) + "}", POSTFIX
    raise TypeError(f"cannot emit {type(e).__name__}")


def decl(d: M.MDecl) -> str:
    items = []
    for it in d.items:
        s = declarator(it.name, it.ctype, d.base)
        if it.init is not None:
            s += f" <== {rvalue(it.init)}"
        items.append(s)
    return f"{d.base.spell()} {', '.join(items)}"


def struct(s: M.MStruct) -> str:
    fields = " and ".join(f"{spell_type(root_type(t))} {declarator(n, t, root_type(t))}"
                          for n, t in s.fields)
    return f"struct {s.name} {{{fields}}}"


def _is_compound(s):
    return isinstance(s, (M.MChop, M.MIf, M.MWhile)) or (
        isinstance(s, M.MAnd) and any(isinstance(x, (M.MChop, M.MIf, M.MWhile))
                                      for x in M.and_list(s)))


def stmt(s: M.MStmt, ind: int = 0, style: Style = Style()) -> str:
    parts = M.chop_list(s)
    pad = style.indent * ind
    return (";\n" + pad).join(_stmt(p, ind, style) for p in parts)


def _body(s, ind, style):
    """Braced body of if/while, one statement per line unless the style
    asks for short bodies inline."""
    if style.inline_bodies and not _is_compound(s):
        return "{" + _stmt(s, ind, style) + "}"
    pad = style.indent * ind
    inner = style.indent * (ind + 1)
    return "{\n" + inner + stmt(s, ind + 1, style) + "\n" + pad + "}"


def _group(s, ind, style):
    if isinstance(s, (M.MChop, M.MAnd)):
        return "{" + stmt(s, ind, style) + "}"
    return _stmt(s, ind, style)


def _stmt(s, ind, style):
    if isinstance(s, M.MEmpty):
        return "empty"
    if isinstance(s, M.MSkip):
        return "skip"
    if isinstance(s, M.MUnitAssign):
        return f"{expr(s.target)}:={rvalue(s.value)}"
    if isinstance(s, M.MAssign):
        return f"{expr(s.target)} <== {rvalue(s.value)}"
    if isinstance(s, M.MAnd):
        items = M.and_list(s)
        return " and ".join(_group(x, ind, style) if isinstance(x, M.MChop) else
                            _stmt(x, ind, style) for x in items)
    if isinstance(s, M.MChop):
        return "{" + stmt(s, ind, style) + "}"
    if isinstance(s, M.MNext):
        return "next " + _group(s.body, ind, style)
    if isinstance(s, M.MAlways):
        return "always " + _group(s.body, ind, style)
    if isinstance(s, M.MMore):
        return "more"
    if isinstance(s, M.MTrue):
        return "true"
    if isinstance(s, M.MFalse):
        return "false"
    if isinstance(s, M.MIf):
        return (f"if({expr(s.cond)})then{_body(s.then, ind, style)}"
                f"else{_body(s.other, ind, style)}")
    if isinstance(s, M.MWhile):
        return f"while({expr(s.cond)}){_body(s.body, ind, style)}"
    if isinstance(s, (M.MCall, M.MExtCall)):
        args = [rvalue(a) for a in s.args] + (["RVal"] if s.rval else [])
        pre = "ext " if isinstance(s, M.MExtCall) else ""
        return f"{pre}{_callee(s.callee)}({', '.join(args)})"
    if isinstance(s, M.MDecl):
        return decl(s)
    raise TypeError(f"cannot emit {type(s).__name__}")


def function(f: M.MFunction, style: Style = Style()) -> str:
    ps = [param(p.ctype, p.name) for p in f.params]
    if f.rval_type is not None:
        ps.append(param(f.rval_type, "RVal"))
    head = f"function {f.name}({', '.join(ps)})"
    return head + "{\n" + style.indent + stmt(f.body, 1, style) + "\n}"


def emit(p: M.MProgram, style: Style = Style()) -> str:
    chunks = []
    for d in p.decls:
        chunks.append(struct(d) if isinstance(d, M.MStruct) else stmt(d, 0, style))
    for f in p.functions:
        chunks.append(function(f, style))
    chunks.append(stmt(p.body, 0, style))
    return ";\n".join(chunks) + "\n"
