"""Serialises an Xd-C AST back to C text (used for round-trip checks)."""
from __future__ import annotations

from ..types import ArrayType, FuncType, PointerType, CType
from . import ast as A

PREC = {"||": 4, "&&": 5, "|": 6, "^": 7, "&": 8, "==": 9, "!=": 9,
        "<": 10, ">": 10, "<=": 10, ">=": 10, "<<": 11, ">>": 11,
        "+": 12, "-": 12, "*": 13, "/": 13, "%": 13}
UNARY = 14
POSTFIX = 15


def spell_type(t: CType) -> str:
    """Type name as used in casts."""
    if isinstance(t, PointerType):
        return spell_type(t.target) + "*"
    return t.spell()


def declarator(name: str, t: CType, base: CType) -> str:
    dims = ""
    if isinstance(t, ArrayType):
        dims = "".join(f"[{d}]" for d in t.dims)
        t = t.elem
    if isinstance(t, PointerType) and isinstance(t.target, FuncType) and t != base:
        ft = t.target
        ps = ", ".join(param(p, "") for p in ft.params) or "void"
        return f"(*{name})({ps})"
    stars = 0
    while t != base and isinstance(t, PointerType):
        stars += 1
        t = t.target
    return "*" * stars + name + dims


def root_type(t: CType) -> CType:
    if isinstance(t, ArrayType):
        t = t.elem
    while isinstance(t, PointerType) and not isinstance(t.target, FuncType):
        t = t.target
    if isinstance(t, PointerType):  # function pointer: base is the return type
        return root_type(t.target.ret)
    return t


def param(t: CType, name: str) -> str:
    if isinstance(t, PointerType) and isinstance(t.target, FuncType):
        ft = t.target
        ps = ", ".join(param(p, "") for p in ft.params) or "void"
        return f"{spell_type(ft.ret)} (*{name})({ps})"
    return f"{spell_type(t)}{' ' + name if name else ''}"


def expr(e: A.Expr) -> str:
    return _expr(e)[0]


def _wrap(e, min_prec, strict=False):
    s, p = _expr(e)
    if p < min_prec or (strict and p == min_prec):
        return f"({s})"
    return s


def _expr(e):
    if isinstance(e, A.Const):
        text = e.text or str(e.value)
        return text, (UNARY if text.startswith("-") else POSTFIX)
    if isinstance(e, A.Var):
        return e.name, POSTFIX
    if isinstance(e, A.Index):
        return f"{e.name}[{expr(e.index)}]", POSTFIX
    if isinstance(e, A.Index2):
        return f"{e.name}[{expr(e.i)}][{expr(e.j)}]", POSTFIX
    if isinstance(e, A.Member):
        return f"{_wrap(e.base, POSTFIX)}.{e.field}", POSTFIX
    if isinstance(e, A.Arrow):
        return f"{_wrap(e.base, POSTFIX)}->{e.field}", POSTFIX
    if isinstance(e, A.Call):
        args = ", ".join(_wrap(a, 3) for a in e.args)
        return f"{_wrap(e.callee, POSTFIX)}({args})", POSTFIX
    if isinstance(e, (A.Deref, A.AddrOf, A.Unop)):
        op = {A.Deref: "*", A.AddrOf: "&"}.get(type(e)) or e.op
        inner = _wrap(e.expr, UNARY)
        if inner[0] in "+-&*" and op in "+-&*":
            inner = f"({inner})"
        return f"{op}{inner}", UNARY
    if isinstance(e, A.Cast):
        return f"({spell_type(e.to)}){_wrap(e.expr, UNARY)}", UNARY
    if isinstance(e, A.Binop):
        p = PREC[e.op]
        return f"{_wrap(e.left, p)} {e.op} {_wrap(e.right, p, strict=True)}", p
    if isinstance(e, A.Cond):
        return f"{_wrap(e.cond, 4)} ? {_wrap(e.then, 3)} : {_wrap(e.other, 3)}", 3
    if isinstance(e, A.InitList):
        return "{" + ", ".join(expr(i) for i in e.items) + "}", POSTFIX
    raise TypeError(f"cannot print {type(e).__name__}")


def simple(s: A.Stmt) -> str:
    """Statement text without the trailing ';' (for-loop headers)."""
    if isinstance(s, A.Null):
        return ""
    if isinstance(s, A.Assign):
        return f"{expr(s.target)} = {expr(s.value)}"
    if isinstance(s, A.PostInc):
        return f"{_wrap(s.target, POSTFIX)}++"
    if isinstance(s, A.PostDec):
        return f"{_wrap(s.target, POSTFIX)}--"
    if isinstance(s, A.CallStmt):
        return expr(s.call)
    raise TypeError(f"not a simple statement: {type(s).__name__}")


def stmt(s: A.Stmt, ind=1) -> list[str]:
    pad = "    " * ind
    out = []
    for st in A.flatten(s):
        out.extend(_stmt(st, ind, pad))
    return out


def _block(s, ind):
    return stmt(s, ind + 1)


def _stmt(s, ind, pad):
    if isinstance(s, A.Null):
        return [pad + ";"]
    if isinstance(s, (A.Assign, A.PostInc, A.PostDec, A.CallStmt)):
        return [pad + simple(s) + ";"]
    if isinstance(s, A.If):
        out = [f"{pad}if ({expr(s.cond)}) {{", *_block(s.then, ind), f"{pad}}} else {{",
               *_block(s.other, ind), f"{pad}}}"]
        return out
    if isinstance(s, A.While):
        return [f"{pad}while ({expr(s.cond)}) {{", *_block(s.body, ind), f"{pad}}}"]
    if isinstance(s, A.Do):
        return [f"{pad}do {{", *_block(s.body, ind), f"{pad}}} while ({expr(s.cond)});"]
    if isinstance(s, A.For):
        cond = "" if s.cond is None else expr(s.cond)
        return [f"{pad}for ({simple(s.init)}; {cond}; {simple(s.step)}) {{",
                *_block(s.body, ind), f"{pad}}}"]
    if isinstance(s, A.Switch):
        out = [f"{pad}switch ({expr(s.expr)}) {{"]
        for c in s.cases:
            label = "default:" if c.value is None else f"case {c.value}:"
            out.append(f"{pad}{label}")
            out.extend(stmt(c.body, ind + 1))
        out.append(f"{pad}}}")
        return out
    if isinstance(s, A.Break):
        return [pad + "break;"]
    if isinstance(s, A.Continue):
        return [pad + "continue;"]
    if isinstance(s, A.Return):
        return [pad + ("return;" if s.value is None else f"return {expr(s.value)};")]
    raise TypeError(f"cannot print {type(s).__name__}")


def decl(d, ind=0) -> list[str]:
    pad = "    " * ind
    if isinstance(d, A.StructDef):
        fields = " ".join(f"{spell_type(root_type(t))} {declarator(n, t, root_type(t))};"
                          for n, t in d.fields)
        return [f"{pad}struct {d.name} {{ {fields} }};"]
    items = []
    for it in d.items:
        s = declarator(it.name, it.ctype, d.base)
        if it.init is not None:
            s += f" = {expr(it.init)}"
        items.append(s)
    return [f"{pad}{d.base.spell()} {', '.join(items)};"]


def function(f: A.FuncDef) -> list[str]:
    ps = ", ".join(param(p.ctype, p.name) for p in f.params) or "void"
    head = f"{spell_type(f.ret)} {f.name}({ps})"
    if f.body is None:
        return [f"{'extern ' if f.is_extern else ''}{head};"]
    out = [head + " {"]
    for d in f.locals:
        out.extend(decl(d, 1))
    out.extend(stmt(f.body, 1))
    out.append("}")
    return out


def print_program(p: A.Program) -> str:
    lines = []
    for d in p.decls:
        lines.extend(decl(d))
    for f in p.functions:
        lines.extend(function(f))
    return "\n".join(lines) + "\n"
