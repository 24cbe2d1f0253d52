"""Negative-list checker: reports every construct outside Xd-C.

Items:
 1 goto and labels             8 typedef/extern variables/static/auto/register
 2 union                       9 const/volatile
 3 prefix ++/--               10 declarations in nested blocks
 4 comma expressions          11 nested switch or misplaced case labels
 5 compound assignment        12 assignments inside conditions
 6 brace assignment to struct 13 pointers to extern functions
 7 chained assignment         14 variadic functions
"""
from __future__ import annotations

from ..diagnostics import Diagnostic
from ..types import StructType
from . import ast as A

ITEM_TITLES = {
    1: "goto statement", 2: "union type", 3: "prefix increment/decrement",
    4: "comma expression", 5: "compound assignment", 6: "brace assignment to a struct",
    7: "continuous assignment", 8: "storage class specifier", 9: "type qualifier",
    10: "declaration in a nested block", 11: "nested switch or case",
    12: "assignment inside a condition", 13: "pointer to an extern function",
    14: "variable argument list",
}

_ASSIGNS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="}


def check_subset(prog: A.Program) -> list[Diagnostic]:
    fname = prog.filename
    out: list[Diagnostic] = []

    def report(item, msg, span):
        out.append(Diagnostic(msg, span, "error", item, fname))

    for item, msg, span in prog.violations:
        report(item, msg, span)

    defined = {f.name for f in prog.functions if f.body is not None}
    externs = {f.name for f in prog.functions} - defined

    for d in prog.decls:
        if isinstance(d, A.VarDecl) and d.storage:
            report(8, f"storage class '{d.storage}' on a variable", d.span)
    for f in prog.functions:
        if f.storage and f.storage != "extern":
            report(8, f"storage class '{f.storage}' on function '{f.name}'", f.span)
        if f.variadic:
            report(14, f"variadic function '{f.name}'", f.span)
        for d in f.locals:
            if isinstance(d, A.VarDecl) and d.storage:
                report(8, f"storage class '{d.storage}' on a variable", d.span)

    # (node, in_cond, in_switch, is_callee)
    stack = [(n, False, False, False) for n in reversed(A.children(prog))]
    while stack:
        node, in_cond, in_switch, callee = stack.pop()
        kids = None
        if isinstance(node, A.Declarator):
            if isinstance(node.ctype, StructType) and isinstance(node.init, A.InitList):
                report(6, f"brace initialisation of struct '{node.name}'", node.span)
        elif isinstance(node, A.BadStmt):
            if node.item is not None:
                report(node.item, node.what, node.span)
            else:
                report(None, f"{node.what} is not Xd-C", node.span)
        elif isinstance(node, A.Bad):
            if node.op in _ASSIGNS:
                if in_cond:
                    report(12, "assignment inside a condition", node.span)
                elif node.op == "=":
                    report(7, "assignment used as a value", node.span)
                else:
                    report(5, f"compound assignment '{node.op}'", node.span)
            elif node.op in ("pre++", "pre--"):
                report(3, f"prefix '{node.op[3:]}'", node.span)
            elif node.op == ",":
                report(4, "comma expression", node.span)
            elif node.op == "string":
                report(None, "string literals are not Xd-C", node.span)
            elif node.op == "sizeof":
                report(None, "sizeof is not Xd-C", node.span)
            else:
                report(None, f"'{node.op[4:]}' inside an expression is not Xd-C", node.span)
        elif isinstance(node, A.Var):
            if node.name in externs and not callee:
                report(13, f"pointer to extern function '{node.name}'", node.span)
        elif isinstance(node, A.Switch):
            if in_switch:
                report(11, "switch nested inside a switch", node.span)
            kids = [(node.expr, True, in_switch, False)]
            kids += [(c, False, True, False) for c in node.cases]
        elif isinstance(node, (A.If, A.While)):
            kids = [(node.cond, True, in_switch, False)]
            kids += [(c, False, in_switch, False) for c in A.children(node)[1:]]
        elif isinstance(node, A.Do):
            kids = [(node.body, False, in_switch, False), (node.cond, True, in_switch, False)]
        elif isinstance(node, A.For):
            kids = [(node.init, False, in_switch, False)]
            if node.cond is not None:
                kids.append((node.cond, True, in_switch, False))
            kids += [(node.step, False, in_switch, False), (node.body, False, in_switch, False)]
        elif isinstance(node, A.Call):
            kids = [(node.callee, in_cond, in_switch, True)]
            kids += [(a, in_cond, in_switch, False) for a in node.args]
        if kids is None:
            kids = [(c, in_cond, in_switch, False) for c in A.children(node)]
        stack.extend(reversed(kids))
    out.sort(key=lambda d: (d.span.line, d.span.col))
    return out
