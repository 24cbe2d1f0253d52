"""Abstract syntax of the MSVL subset targeted by the translator."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..types import CType


class MNode:
    pass


class MExpr(MNode):
    pass


@dataclass(frozen=True)
class MConst(MExpr):
    value: object
    text: str = field(default="", compare=False)
    lit: str = "int"  # int | uint | long | char | float | double


@dataclass(frozen=True)
class MBool(MExpr):
    value: bool


@dataclass(frozen=True)
class MVar(MExpr):
    name: str


@dataclass(frozen=True)
class MIndex(MExpr):
    name: str
    index: MExpr


@dataclass(frozen=True)
class MIndex2(MExpr):
    name: str
    i: MExpr
    j: MExpr


@dataclass(frozen=True)
class MMember(MExpr):
    base: MExpr
    field: str


@dataclass(frozen=True)
class MArrow(MExpr):
    base: MExpr
    field: str


@dataclass(frozen=True)
class MDeref(MExpr):
    expr: MExpr


@dataclass(frozen=True)
class MAddrOf(MExpr):
    expr: MExpr


@dataclass(frozen=True)
class MCast(MExpr):
    to: CType
    expr: MExpr


@dataclass(frozen=True)
class MUnop(MExpr):
    op: str  # + - ~ !
    expr: MExpr


@dataclass(frozen=True)
class MBinop(MExpr):
    op: str  # arithmetic, bitwise, relational (= != < ...), and, or
    left: MExpr
    right: MExpr


@dataclass(frozen=True)
class MIfExpr(MExpr):
    cond: MExpr
    then: MExpr
    other: MExpr


@dataclass(frozen=True)
class MPrev(MExpr):
    depth: int
    expr: MExpr


@dataclass(frozen=True)
class MExtCallExpr(MExpr):
    callee: MExpr
    args: tuple
    rval: bool = False


@dataclass(frozen=True)
class MInitList(MExpr):
    items: tuple


class MStmt(MNode):
    pass


@dataclass(frozen=True)
class MEmpty(MStmt):
    pass


@dataclass(frozen=True)
class MSkip(MStmt):
    pass


@dataclass(frozen=True)
class MTrue(MStmt):
    """The formula true: any interval."""


@dataclass(frozen=True)
class MFalse(MStmt):
    pass


@dataclass(frozen=True)
class MMore(MStmt):
    """more, i.e. next true: the interval goes on."""


@dataclass(frozen=True)
class MAlways(MStmt):
    body: MStmt


@dataclass(frozen=True)
class MAssign(MStmt):
    """la <== ra (present assignment)."""
    target: MExpr
    value: MExpr


@dataclass(frozen=True)
class MUnitAssign(MStmt):
    """la := ra."""
    target: MExpr
    value: MExpr


@dataclass(frozen=True)
class MAnd(MStmt):
    left: MStmt
    right: MStmt


@dataclass(frozen=True)
class MNext(MStmt):
    body: MStmt


@dataclass(frozen=True)
class MChop(MStmt):
    left: MStmt
    right: MStmt


@dataclass(frozen=True)
class MIf(MStmt):
    cond: MExpr
    then: MStmt
    other: MStmt


@dataclass(frozen=True)
class MWhile(MStmt):
    cond: MExpr
    body: MStmt


@dataclass(frozen=True)
class MCall(MStmt):
    """Internal call f(args[, RVal])."""
    callee: MExpr
    args: tuple
    rval: bool = False


@dataclass(frozen=True)
class MExtCall(MStmt):
    """External call statement ext g(args[, RVal])."""
    callee: MExpr
    args: tuple
    rval: bool = False


@dataclass(frozen=True)
class MDeclItem(MNode):
    name: str
    ctype: CType
    init: MExpr | None = None


@dataclass(frozen=True)
class MDecl(MStmt):
    """Typed variable list, e.g. ``int i, j <== 0``."""
    base: CType
    items: tuple


@dataclass(frozen=True)
class MStruct(MNode):
    name: str
    fields: tuple  # (name, type)


@dataclass(frozen=True)
class MParam(MNode):
    name: str
    ctype: CType


@dataclass(frozen=True)
class MFunction(MNode):
    name: str
    params: tuple
    rval_type: CType | None
    body: MStmt


@dataclass(frozen=True)
class MProgram(MNode):
    decls: tuple  # MStruct | MStmt (a declaration conjoined with skip)
    functions: tuple
    body: MStmt


def chop(stmts):
    """Right-nested chop of a statement list."""
    stmts = list(stmts)
    if not stmts:
        return MEmpty()
    acc = stmts[-1]
    for s in reversed(stmts[:-1]):
        acc = MChop(s, acc)
    return acc


def chop_list(s):
    out = []
    while isinstance(s, MChop):
        out.append(s.left)
        s = s.right
    out.append(s)
    return out


def and_list(s):
    out = []
    while isinstance(s, MAnd):
        out.append(s.left)
        s = s.right
    out.append(s)
    return out


def mchildren(n):
    if isinstance(n, (MConst, MBool, MVar, MEmpty, MSkip, MTrue, MFalse, MMore)):
        return []
    if isinstance(n, MIndex):
        return [n.index]
    if isinstance(n, MIndex2):
        return [n.i, n.j]
    if isinstance(n, (MMember, MArrow)):
        return [n.base]
    if isinstance(n, (MDeref, MAddrOf, MCast, MUnop, MPrev)):
        return [n.expr]
    if isinstance(n, MBinop):
        return [n.left, n.right]
    if isinstance(n, MIfExpr):
        return [n.cond, n.then, n.other]
    if isinstance(n, (MExtCallExpr, MCall, MExtCall)):
        return [n.callee, *n.args]
    if isinstance(n, MInitList):
        return list(n.items)
    if isinstance(n, (MAssign, MUnitAssign)):
        return [n.target, n.value]
    if isinstance(n, (MAnd, MChop)):
        return [n.left, n.right]
    if isinstance(n, (MNext, MAlways)):
        return [n.body]
    if isinstance(n, MIf):
        return [n.cond, n.then, n.other]
    if isinstance(n, MWhile):
        return [n.cond, n.body]
    if isinstance(n, MDecl):
        return list(n.items)
    if isinstance(n, MDeclItem):
        return [n.init] if n.init is not None else []
    if isinstance(n, MStruct):
        return []
    if isinstance(n, MFunction):
        return [*n.params, n.body]
    if isinstance(n, MParam):
        return []
    if isinstance(n, MProgram):
        return [*n.decls, *n.functions, n.body]
    raise TypeError(type(n).__name__)


def mwalk(node):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(mchildren(n)))


def count_nodes(node) -> int:
    """Total number of AST nodes (deterministic, iterative)."""
    return sum(1 for _ in mwalk(node))
