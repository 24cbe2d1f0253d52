"""Xd-C to MSVL translation.

One pass, one construct to one construct. Jump handling follows the guard
scheme: ``break``, ``continue`` and ``return`` become unit assignments to key
variables, and whatever may run after a jump is wrapped in a test on the
corresponding key variable.
"""
from __future__ import annotations

from dataclasses import dataclass

from .msvl import ast as M
from .types import VOID, VoidType
from .xdc import ast as A
from .xdc.typecheck import ProgramInfo

KEY_VARS = ("break", "continue", "return", "switch", "RVal")
MSVL_RESERVED = frozenset("""empty skip and or next if then else while function ext
                             struct true false prev more always RVal mfree""".split())
_GUARD_ORDER = ("break", "return", "continue")


def mname(name: str) -> str:
    """Xd-C identifier to MSVL identifier. Names whose root (the name with
    every trailing ``_v`` removed) is reserved get one more ``_v``, which
    keeps the map injective."""
    root = name
    while root.endswith("_v"):
        root = root[:-2]
    return name + "_v" if root in MSVL_RESERVED else name


@dataclass(frozen=True)
class TranslateOptions:
    guard_first: bool = True  # `break=0 and e` rather than `e and break=0`


def _zero_test(var):
    return M.MBinop("=", M.MVar(var), M.MConst(0, "0"))


def _set(var, n):
    return M.MUnitAssign(M.MVar(var), M.MConst(n, str(n)))


def _conj(parts):
    acc = parts[0]
    for p in parts[1:]:
        acc = M.MBinop("and", acc, p)
    return acc


def _then(a, b):
    """a;b with the chop kept right-nested when a is itself a chop."""
    for item in reversed(M.chop_list(a)):
        b = M.MChop(item, b)
    return b


def _guard(flags, body):
    """Wraps body in if(flag=0) tests, outermost first."""
    for f in reversed([f for f in _GUARD_ORDER if f in flags]):
        body = M.MIf(_zero_test(f), body, M.MEmpty())
    return body


class Translator:
    def __init__(self, info: ProgramInfo | None = None,
                 options: TranslateOptions = TranslateOptions()):
        self.info = info
        self.opts = options
        self._esc: dict[int, frozenset] = {}

    # jump analysis
    def escapes(self, s: A.Stmt) -> frozenset:
        """Jumps in s that leave s: a break owned by an enclosing loop or
        switch, a continue owned by an enclosing loop, any return."""
        if id(s) in self._esc:
            return self._esc[id(s)]
        order = []
        stack = [s]
        while stack:
            n = stack.pop()
            if id(n) in self._esc:
                continue
            order.append(n)
            stack.extend(self._stmt_children(n))
        for n in reversed(order):
            self._esc[id(n)] = self._escapes_one(n)
        return self._esc[id(s)]

    @staticmethod
    def _stmt_children(n):
        if isinstance(n, A.Seq):
            return [n.first, n.rest]
        if isinstance(n, A.If):
            return [n.then, n.other]
        if isinstance(n, (A.While, A.Do)):
            return [n.body]
        if isinstance(n, A.For):
            return [n.init, n.step, n.body]
        if isinstance(n, A.Switch):
            return [c.body for c in n.cases]
        return []

    def _escapes_one(self, n):
        if isinstance(n, A.Break):
            return frozenset({"break"})
        if isinstance(n, A.Continue):
            return frozenset({"continue"})
        if isinstance(n, A.Return):
            return frozenset({"return"})
        kids = frozenset().union(*(self._esc[id(c)] for c in self._stmt_children(n)))
        if isinstance(n, (A.While, A.Do, A.For)):
            return kids - {"break", "continue"}
        if isinstance(n, A.Switch):
            return kids - {"break"}
        return kids

    # expressions
    def expr(self, e: A.Expr) -> M.MExpr:
        if isinstance(e, A.Const):
            return M.MConst(e.value, e.text or str(e.value), "int" if e.lit == "ulong"
                            else e.lit)
        if isinstance(e, A.Var):
            return M.MVar(mname(e.name))
        if isinstance(e, A.Index):
            return M.MIndex(mname(e.name), self.expr(e.index))
        if isinstance(e, A.Index2):
            return M.MIndex2(mname(e.name), self.expr(e.i), self.expr(e.j))
        if isinstance(e, A.Member):
            return M.MMember(self.expr(e.base), mname(e.field))
        if isinstance(e, A.Arrow):
            return M.MArrow(self.expr(e.base), mname(e.field))
        if isinstance(e, A.Deref):
            return M.MDeref(self.expr(e.expr))
        if isinstance(e, A.AddrOf):
            return M.MAddrOf(self.expr(e.expr))
        if isinstance(e, A.Cast):
            return M.MCast(e.to, self.expr(e.expr))
        if isinstance(e, A.Unop):
            return M.MUnop(e.op, self.expr(e.expr))
        if isinstance(e, A.Binop):
            op = {"==": "=", "&&": "and", "||": "or"}.get(e.op, e.op)
            return M.MBinop(op, self.expr(e.left), self.expr(e.right))
        if isinstance(e, A.Cond):
            return M.MIfExpr(self.expr(e.cond), self.expr(e.then), self.expr(e.other))
        if isinstance(e, A.Call):
            args = tuple(self.expr(a) for a in e.args)
            return M.MExtCallExpr(self.expr(e.callee), args, e.target != "extern")
        if isinstance(e, A.InitList):
            return M.MInitList(tuple(self.expr(i) for i in e.items))
        raise TypeError(f"cannot translate {type(e).__name__}")

    # statements
    def stmt(self, s: A.Stmt) -> M.MStmt:
        if isinstance(s, A.Seq):
            return self.chop_tr(s)
        if isinstance(s, A.Null):
            return M.MEmpty()
        if isinstance(s, A.Assign):
            return M.MUnitAssign(self.expr(s.target), self.expr(s.value))
        if isinstance(s, (A.PostInc, A.PostDec)):
            t = self.expr(s.target)
            op = "+" if isinstance(s, A.PostInc) else "-"
            return M.MUnitAssign(t, M.MBinop(op, t, M.MConst(1, "1")))
        if isinstance(s, A.If):
            return M.MIf(self.expr(s.cond), self.stmt(s.then), self.stmt(s.other))
        if isinstance(s, A.Switch):
            return M.chop([_set("break", 0), *self.switch_tr(s), _set("break", 0)])
        if isinstance(s, A.While):
            return self.while_tr(s)
        if isinstance(s, A.Do):
            return self.do_tr(s)
        if isinstance(s, A.For):
            return self.for_tr(s)
        if isinstance(s, A.Continue):
            return _set("continue", 1)
        if isinstance(s, A.Break):
            return _set("break", 1)
        if isinstance(s, A.Return):
            if s.value is None:
                return _set("return", 1)
            return M.MAnd(_set("return", 1),
                          M.MUnitAssign(M.MVar("RVal"), self.expr(s.value)))
        if isinstance(s, A.CallStmt):
            return self.call_stmt(s.call)
        raise TypeError(f"cannot translate {type(s).__name__}")

    def call_stmt(self, c: A.Call):
        callee = self.expr(c.callee)
        args = tuple(self.expr(a) for a in c.args)
        if c.target == "extern":
            return M.MAnd(M.MExtCall(callee, args), M.MSkip())
        ret = c.ctype if c.ctype is not None else VOID
        return M.MCall(callee, args, not isinstance(ret, VoidType))

    def chop_tr(self, s: A.Seq) -> M.MStmt:
        items = A.flatten(s)
        acc = self.stmt(items[-1])
        for cs in reversed(items[:-1]):
            acc = _then(self.stmt(cs), _guard(self.escapes(cs), acc))
        return acc

    def switch_tr(self, s: A.Switch):
        esc = self.escapes(s)
        own_continue = "continue" in esc
        e = self.expr(s.expr)
        arms = [_set("switch", 0)]
        for c in s.cases:
            tail = [_zero_test("break"), _zero_test("return")]
            if own_continue:
                tail.append(_zero_test("continue"))
            body = self.stmt(c.body)
            if c.value is not None:
                label = M.MBinop("or", M.MBinop("=", e, M.MConst(c.value, str(c.value))),
                                 M.MBinop("=", M.MVar("switch"), M.MConst(1, "1")))
                arms.append(M.MIf(_conj([label, *tail]), _then(_set("switch", 1), body),
                                  M.MEmpty()))
            elif isinstance(body, M.MEmpty):
                # an empty default is a no-op under any guard; keep the plain form
                head = M.MBinop("=", M.MVar("switch"), M.MConst(1, "1"))
                arms.append(M.MIf(_conj([head, *tail]), body, M.MEmpty()))
            else:
                arms.append(M.MIf(_conj(tail), body, M.MEmpty()))
        return arms

    def _loop_cond(self, cond, esc):
        guards = [_zero_test(f) for f in ("break", "return") if f in esc]
        if not guards:
            return cond
        return _conj(guards + [cond] if self.opts.guard_first else [cond] + guards)

    def _loop(self, cond, body, esc):
        """while(guards and cond){body}, plus the break reset."""
        loop = M.MWhile(self._loop_cond(cond, esc), body)
        if "break" in esc:
            return _then(loop, _set("break", 0))
        return loop

    def _body(self, body, esc):
        b = self.stmt(body)
        if "continue" in esc:
            b = _then(b, _set("continue", 0))
        return b

    def while_tr(self, s: A.While):
        esc = self.escapes(s.body)
        return self._loop(self.expr(s.cond), self._body(s.body, esc), esc)

    def do_tr(self, s: A.Do):
        esc = self.escapes(s.body)
        body = self._body(s.body, esc)
        return _then(body, self._loop(self.expr(s.cond), body, esc))

    def for_tr(self, s: A.For):
        esc = self.escapes(s.body)
        cond = M.MConst(1, "1") if s.cond is None else self.expr(s.cond)
        step = _guard(esc - {"continue"}, self.stmt(s.step))
        if "continue" in esc:
            step = _then(step, _set("continue", 0))
        body = _then(self.stmt(s.body), step)
        return _then(self.stmt(s.init), self._loop(cond, body, esc))

    # declarations
    def decl(self, d: A.VarDecl) -> M.MStmt:
        items = tuple(M.MDeclItem(mname(it.name), it.ctype,
                                  None if it.init is None else self.expr(it.init))
                      for it in d.items)
        return M.MAnd(M.MDecl(d.base, items), M.MSkip())

    def struct(self, sd: A.StructDef) -> M.MStruct:
        return M.MStruct(sd.name, tuple((mname(n), t) for n, t in sd.fields))

    def function(self, f: A.FuncDef) -> M.MFunction:
        params = tuple(M.MParam(mname(p.name), p.ctype) for p in f.params)
        rval = None if isinstance(f.ret, VoidType) else f.ret
        return M.MFunction(mname(f.name), params, rval, self.body(f))

    def body(self, f: A.FuncDef) -> M.MStmt:
        parts = [self.decl(d) for d in f.locals if isinstance(d, A.VarDecl)]
        parts.append(self.stmt(f.body))
        return M.chop(parts)

    def program(self, p: A.Program) -> M.MProgram:
        decls = []
        for d in p.decls:
            decls.append(self.struct(d) if isinstance(d, A.StructDef) else self.decl(d))
        funcs = []
        for f in p.definitions:
            decls.extend(self.struct(d) for d in f.locals if isinstance(d, A.StructDef))
            if f.name != "main":
                funcs.append(self.function(f))
        return M.MProgram(tuple(decls), tuple(funcs), self.body(p.main))


def prgm_tr(p: A.Program, info: ProgramInfo | None = None,
            options: TranslateOptions = TranslateOptions()) -> M.MProgram:
    return Translator(info, options).program(p)


def translate_stmt(s: A.Stmt, options: TranslateOptions = TranslateOptions()) -> M.MStmt:
    return Translator(None, options).stmt(s)


def translate_expr(e: A.Expr) -> M.MExpr:
    return Translator().expr(e)
