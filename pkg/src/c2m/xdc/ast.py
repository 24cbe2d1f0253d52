"""Xd-C abstract syntax.

Expression nodes carry a ``ctype`` slot filled in by the type checker and a
``span``; neither takes part in structural equality. ``Bad`` and ``BadStmt``
hold constructs outside Xd-C so the subset checker can report them with
their negative-list item.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..diagnostics import NOSPAN, Span
from ..types import CType


def _span():
    return field(default=NOSPAN, compare=False, kw_only=True, repr=False)


def _ctype():
    return field(default=None, compare=False, kw_only=True, repr=False)


class Node:
    pass


class Expr(Node):
    pass


@dataclass(eq=True)
class Const(Expr):
    value: object
    lit: str = "int"  # int | uint | long | ulong | char | float | double
    text: str = field(default="", compare=False)
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Var(Expr):
    name: str
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Index(Expr):
    name: str
    index: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Index2(Expr):
    name: str
    i: Expr
    j: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Member(Expr):
    base: Expr
    field: str
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Arrow(Expr):
    base: Expr
    field: str
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Deref(Expr):
    expr: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class AddrOf(Expr):
    expr: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Cast(Expr):
    to: CType
    expr: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Unop(Expr):
    op: str
    expr: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Binop(Expr):
    op: str
    left: Expr
    right: Expr
    span: Span = _span()
    ctype: CType = _ctype()
    optype: tuple = _ctype()  # (left operand type, right operand type, kind)


@dataclass(eq=True)
class Cond(Expr):
    cond: Expr
    then: Expr
    other: Expr
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Call(Expr):
    callee: Expr
    args: list
    span: Span = _span()
    ctype: CType = _ctype()
    target: str = _ctype()  # user | extern | fptr, set by the checker


@dataclass(eq=True)
class InitList(Expr):
    items: list
    span: Span = _span()
    ctype: CType = _ctype()


@dataclass(eq=True)
class Bad(Expr):
    """Non-Xd-C expression: op is one of '=', '+=' (etc.), 'pre++', 'pre--',
    'post++', 'post--', ',', 'sizeof', 'string'."""
    op: str
    parts: list
    span: Span = _span()
    ctype: CType = _ctype()


class Stmt(Node):
    pass


@dataclass(eq=True)
class Null(Stmt):
    span: Span = _span()


@dataclass(eq=True)
class PostInc(Stmt):
    target: Expr
    span: Span = _span()


@dataclass(eq=True)
class PostDec(Stmt):
    target: Expr
    span: Span = _span()


@dataclass(eq=True)
class Assign(Stmt):
    target: Expr
    value: Expr
    span: Span = _span()


@dataclass(eq=True)
class If(Stmt):
    cond: Expr
    then: Stmt
    other: Stmt
    span: Span = _span()


@dataclass(eq=True)
class Case(Node):
    value: int | None  # None marks default
    body: Stmt
    span: Span = _span()


@dataclass(eq=True)
class Switch(Stmt):
    expr: Expr
    cases: list  # labelled Case nodes then the default
    span: Span = _span()


@dataclass(eq=True)
class While(Stmt):
    cond: Expr
    body: Stmt
    span: Span = _span()


@dataclass(eq=True)
class Do(Stmt):
    body: Stmt
    cond: Expr
    span: Span = _span()


@dataclass(eq=True)
class For(Stmt):
    init: Stmt
    cond: Expr | None
    step: Stmt
    body: Stmt
    span: Span = _span()


@dataclass(eq=True)
class Continue(Stmt):
    span: Span = _span()


@dataclass(eq=True)
class Break(Stmt):
    span: Span = _span()


@dataclass(eq=True)
class Return(Stmt):
    value: Expr | None = None
    span: Span = _span()


@dataclass(eq=True)
class Seq(Stmt):
    first: Stmt
    rest: Stmt
    span: Span = _span()


@dataclass(eq=True)
class CallStmt(Stmt):
    call: Call
    span: Span = _span()


@dataclass(eq=True)
class BadStmt(Stmt):
    """Non-Xd-C statement: goto, labels, compound assignment, nested-block
    declarations and the like. item is the negative-list number or None."""
    what: str
    item: int | None
    parts: list = field(default_factory=list)
    span: Span = _span()


@dataclass(eq=True)
class Declarator(Node):
    name: str
    ctype: CType
    init: Expr | None = None
    span: Span = _span()


@dataclass(eq=True)
class VarDecl(Node):
    base: CType
    items: list
    storage: str | None = None  # typedef/extern/static/auto/register
    qualifiers: tuple = ()
    span: Span = _span()


@dataclass(eq=True)
class StructDef(Node):
    name: str
    fields: list  # (name, type)
    union: bool = False
    span: Span = _span()


@dataclass(eq=True)
class Param(Node):
    name: str
    ctype: CType
    span: Span = _span()


@dataclass(eq=True)
class FuncDef(Node):
    ret: CType
    name: str
    params: list
    locals: list = field(default_factory=list)
    body: Stmt | None = None  # None for prototypes and externs
    is_extern: bool = False
    variadic: bool = False
    storage: str | None = None
    span: Span = _span()

    @property
    def ftype(self):
        from ..types import FuncType
        return FuncType(self.ret, tuple(p.ctype for p in self.params))


@dataclass(eq=True)
class Program(Node):
    decls: list  # VarDecl | StructDef in source order
    functions: list  # FuncDef definitions (main last), prototypes and externs
    filename: str = field(default="<input>", compare=False)
    violations: list = field(default_factory=list, compare=False, repr=False)

    @property
    def definitions(self):
        return [f for f in self.functions if f.body is not None]

    @property
    def externs(self):
        return [f for f in self.functions if f.is_extern]

    @property
    def main(self):
        for f in self.functions:
            if f.name == "main" and f.body is not None:
                return f
        return None


def seq(stmts, span=NOSPAN):
    """Right-nested Seq of a statement list (Null for an empty list)."""
    stmts = list(stmts)
    if not stmts:
        return Null(span=span)
    acc = stmts[-1]
    for s in reversed(stmts[:-1]):
        acc = Seq(s, acc, span=s.span)
    return acc


def flatten(stmt):
    """Statement list of a right-nested Seq spine (iterative)."""
    out = []
    while isinstance(stmt, Seq):
        out.append(stmt.first)
        stmt = stmt.rest
    out.append(stmt)
    return out


def children(node):
    """Immediate child nodes of any AST node (expressions and statements)."""
    if isinstance(node, (Const, Var, Null, Continue, Break)):
        return []
    if isinstance(node, Index):
        return [node.index]
    if isinstance(node, Index2):
        return [node.i, node.j]
    if isinstance(node, (Member, Arrow)):
        return [node.base]
    if isinstance(node, (Deref, AddrOf, Cast, Unop)):
        return [node.expr]
    if isinstance(node, Binop):
        return [node.left, node.right]
    if isinstance(node, Cond):
        return [node.cond, node.then, node.other]
    if isinstance(node, Call):
        return [node.callee, *node.args]
    if isinstance(node, InitList):
        return list(node.items)
    if isinstance(node, (Bad, BadStmt)):
        return [p for p in node.parts if isinstance(p, Node)]
    if isinstance(node, (PostInc, PostDec)):
        return [node.target]
    if isinstance(node, Assign):
        return [node.target, node.value]
    if isinstance(node, If):
        return [node.cond, node.then, node.other]
    if isinstance(node, Case):
        return [node.body]
    if isinstance(node, Switch):
        return [node.expr, *node.cases]
    if isinstance(node, While):
        return [node.cond, node.body]
    if isinstance(node, Do):
        return [node.body, node.cond]
    if isinstance(node, For):
        return [node.init] + ([node.cond] if node.cond is not None else []) + [node.step, node.body]
    if isinstance(node, Return):
        return [node.value] if node.value is not None else []
    if isinstance(node, Seq):
        return [node.first, node.rest]
    if isinstance(node, CallStmt):
        return [node.call]
    if isinstance(node, Declarator):
        return [node.init] if node.init is not None else []
    if isinstance(node, VarDecl):
        return list(node.items)
    if isinstance(node, FuncDef):
        return list(node.locals) + ([node.body] if node.body is not None else [])
    if isinstance(node, Program):
        return list(node.decls) + list(node.functions)
    return []


def walk(node):
    """Pre-order traversal without Python recursion."""
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(children(n)))
