"""Interpreter for the MSVL subset by configuration reduction.

A configuration is (program, history, current state, counter). Within a
state the program is rewritten until it reaches a normal form: ``empty``
(the interval ends here) or ``next ms`` (move to a fresh state and continue
with ms). Present assignments ``x <== n`` met on the way are written into
the current state. Unit assignments ``x := e`` evaluate e now and postpone
the write to the next state.

Framing is lazy. A new state starts as a copy of the previous one; a
variable read before it is assigned keeps its framed value, and assigning it
a different value later in the same state makes the program false
(Infeasible).
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .deep import deep_call
from .diagnostics import Infeasible, RuntimeFault, Timeout
from .externs import ExternModel
from .msvl import ast as M
from .optype import OpTypeError, binop_type, cond_type, unop_type
from .types import (INT, ArrayType, CType, FloatType, FuncType, IntType, PointerType,
                    StructTable, StructType, VoidType, chunk_of)
from .values import UNDEF, Ptr, arith, compare, convert, fmt_value, truth, unary, wrap_int

DEFAULT_FUEL = 1_000_000
KEY_INIT = ("break", "continue", "return", "switch")
_LIT = {"int": INT, "uint": IntType("int", False), "long": IntType("long"), "char": INT,
        "float": FloatType("float"), "double": FloatType("double")}


# normal forms
class _NF:
    __slots__ = ("kind", "body")

    def __init__(self, kind, body=None):
        self.kind = kind
        self.body = body

    def __repr__(self):
        return self.kind if self.body is None else f"next({self.body})"


EMPTY = _NF("empty")
ANY = _NF("state")  # a state formula with no length constraint of its own
EXT = _NF("ext")    # an external call: the state advances once, unchanged


def Always(body):
    """always ms whose body set no length: waits for a conjunct that does."""
    return _NF("always", body)


def Next(body):
    return _NF("next", body)


# internal program forms produced during reduction
@dataclass(frozen=True, eq=False)
class _Present(M.MStmt):
    """x1 <== n1 and ... and empty, with locations and values already known."""
    writes: tuple  # (block, offset, value)


@dataclass(frozen=True, eq=False)
class _In(M.MStmt):
    """Runs body with frame as the current activation."""
    frame: object
    body: M.MStmt


@dataclass(frozen=True, eq=False)
class _Free(M.MStmt):
    """ext mfree(...) and empty for one activation."""
    frame: object


@dataclass
class MBlock:
    size: int
    root: str
    layout: dict  # offset -> (path, scalar type)
    live: bool = True
    func: object = None  # MFunction, or an extern name


@dataclass
class Frame:
    fid: int
    name: str
    env: dict = field(default_factory=dict)  # name -> (block, type)
    blocks: list = field(default_factory=list)


@dataclass
class Interval:
    """States of a run; ``states`` is filled only when recording."""
    length: int = 0
    states: list = field(default_factory=list)


@dataclass
class Configuration:
    program: object
    sigma: Interval
    state: object
    i: int

    @property
    def is_final(self):
        return self.program is True and self.state is None and self.i == self.sigma.length + 1


@dataclass
class MsvlSnapshot:
    vars: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    funcs: dict = field(default_factory=dict)


@dataclass
class MsvlResult:
    status: str  # terminates | timeout | error | infeasible
    exit_code: int | None = None
    events: list = field(default_factory=list)
    snapshot: MsvlSnapshot | None = None
    interval: Interval = field(default_factory=Interval)
    final: Configuration | None = None
    error: str | None = None
    rules: Counter = field(default_factory=Counter)
    steps: int = 0


@lru_cache(maxsize=4096)
def _binop_type(op, lt, rt, llit, rlit, lnull, rnull):
    return binop_type(op, lt, rt, llit, rlit, lnull, rnull)


def _same(a, b):
    if isinstance(a, float) and isinstance(b, float) and math.isnan(a) and math.isnan(b):
        return True
    return a == b


def _lit_type(c: M.MConst):
    return _LIT.get(c.lit, INT)


def _is_null(e):
    return isinstance(e, M.MConst) and e.value == 0 and e.lit in ("int", "uint", "long")


def _py_type(v):
    if isinstance(v, float):
        return FloatType("double")
    return IntType("long")


class Machine:
    def __init__(self, prog: M.MProgram, fuel=DEFAULT_FUEL, externs: ExternModel | None = None,
                 extern_sigs: dict | None = None, record=False, require_exit=True):
        self.prog = prog
        self.require_exit = require_exit
        self.fuel = fuel
        self.steps = 0
        self.externs = externs if externs is not None else ExternModel()
        self.sigs = dict(extern_sigs or {})
        self.record = record
        self.rules = Counter()
        self.structs = StructTable()
        self.blocks: dict[int, MBlock] = {}
        self.next_block = 1
        self.next_fid = 0
        self.functions: dict[str, M.MFunction] = {}
        self.funcs: dict[str, int] = {}
        self.globals = self.new_frame("global")
        self.frame = self.globals
        # current state
        self.values: dict = {}
        self.assigned: dict = {}
        self.framed: set = set()
        self.i = 0
        self.interval = Interval()
        self.keep_undo = record or any(isinstance(n, M.MPrev) for n in M.mwalk(prog))
        self.undo: list[dict] = [{}]
        self.prev_depth = 0
        for d in prog.decls:
            if isinstance(d, M.MStruct):
                self.structs.define(d.name, list(d.fields))
        for f in prog.functions:
            self.functions[f.name] = f
            self.funcs[f.name] = self.alloc_func(f.name, f)
        for name in self.sigs:
            if name not in self.funcs:
                self.funcs[name] = self.alloc_func(name, name)

    # blocks and frames
    def alloc_func(self, name, f):
        b = self.next_block
        self.next_block += 1
        self.blocks[b] = MBlock(1, name, {}, func=f)
        return b

    def new_frame(self, name):
        self.next_fid += 1
        return Frame(self.next_fid, name)

    def alloc(self, frame: Frame, name, t: CType):
        b = self.next_block
        self.next_block += 1
        if frame.name == "global":
            root = name
        elif frame.name == "main":
            root = f"main::{name}"
        else:
            root = f"{frame.name}#{frame.fid}::{name}"
        layout = {off: (root + suf, lt) for suf, off, lt in self.structs.leaves(t)}
        self.blocks[b] = MBlock(self.structs.sizeof(t), root, layout)
        frame.env[name] = (b, t)
        frame.blocks.append(b)
        return b

    def tick(self):
        self.steps += 1
        if self.steps > self.fuel:
            raise Timeout(f"fuel {self.fuel} exhausted")

    # cells
    def _cell(self, b, off, t):
        blk = self.blocks.get(b)
        if blk is None or not blk.live:
            raise RuntimeFault(f"access to {'released' if blk else 'invalid'} block {b}")
        if blk.func is not None:
            raise RuntimeFault("data access to a function")
        cell = blk.layout.get(off)
        if cell is None:
            if 0 <= off < blk.size:
                raise RuntimeFault(f"mismatched access at ({b},{off})")
            raise RuntimeFault(f"out-of-bounds access at ({b},{off})")
        if chunk_of(cell[1]) != chunk_of(t):
            raise RuntimeFault(f"mismatched access at ({b},{off})")
        return blk

    def read(self, b, off, t):
        if isinstance(t, ArrayType):
            return Ptr(b, off)
        if chunk_of(t) is None:
            raise RuntimeFault(f"value of type {t} cannot be read")
        self._cell(b, off, t)
        loc = (b, off)
        v = self.values.get(loc, UNDEF)
        if self.prev_depth:
            for k in range(self.i, self.i - self.prev_depth, -1):
                if loc in self.undo[k]:
                    v = self.undo[k][loc]
        elif loc not in self.assigned and loc not in self.framed:
            self.framed.add(loc)
            if self.i > 0:
                self.rules["MIN2"] += 1
        if v is UNDEF:
            raise RuntimeFault(f"read of undefined value at ({b},{off})")
        return v

    def write(self, b, off, t, v):
        """Present assignment of a ready value (MIN1)."""
        self._cell(b, off, t)
        loc = (b, off)
        self.rules["MIN1"] += 1
        if loc in self.assigned:
            if not _same(self.assigned[loc], v):
                # x = n and x = m with n != m is p and not p
                self.rules["F3"] += 1
                self.rules["F1"] += 1
                raise Infeasible(f"conflicting assignments to {self.path(loc)} in state {self.i}")
            return
        old = self.values.get(loc, UNDEF)
        if loc in self.framed and not _same(old, v):
            self.rules["F1"] += 1
            raise Infeasible(f"{self.path(loc)} read and then reassigned in state {self.i}")
        self.assigned[loc] = v
        if self.keep_undo:
            self.undo[self.i].setdefault(loc, old)
        self.values[loc] = v

    def path(self, loc):
        blk = self.blocks.get(loc[0])
        if blk is None or loc[1] not in blk.layout:
            return f"({loc[0]},{loc[1]})"
        return blk.layout[loc[1]][0]

    # names
    def lookup(self, name):
        self.rules["L1"] += 1
        if name in self.frame.env:
            return self.frame.env[name]
        if name in self.globals.env:
            return self.globals.env[name]
        raise RuntimeFault(f"unbound variable '{name}'")

    def func_type(self, name):
        f = self.functions.get(name)
        if f is not None:
            ret = f.rval_type if f.rval_type is not None else VoidType()
            return FuncType(ret, tuple(p.ctype for p in f.params))
        if name in self.sigs:
            return self.sigs[name]
        return None

    # expressions
    def eval_left(self, la):
        """(block, offset, type) of a left value (L1-L6)."""
        if isinstance(la, M.MVar):
            b, t = self.lookup(la.name)
            return b, 0, t
        if isinstance(la, M.MIndex):
            self.rules["L2"] += 1
            n, _ = self.eval_right(la.index)
            b, t = self.lookup(la.name)
            if isinstance(t, ArrayType):
                return b, n * self.structs.sizeof(t.elem), t.elem
            p = self.read(b, 0, t)
            if not isinstance(p, Ptr):
                raise RuntimeFault("indexing through a null pointer")
            return p.block, p.offset + n * self.structs.sizeof(t.target), t.target
        if isinstance(la, M.MIndex2):
            self.rules["L3"] += 1
            n1, _ = self.eval_right(la.i)
            n2, _ = self.eval_right(la.j)
            b, t = self.lookup(la.name)
            return b, (n1 * t.dims[1] + n2) * self.structs.sizeof(t.elem), t.elem
        if isinstance(la, M.MMember):
            self.rules["L4"] += 1
            b, off, t = self.eval_left(la.base)
            return self._field(b, off, t, la.field)
        if isinstance(la, M.MArrow):
            self.rules["L5"] += 1
            p, pt = self.eval_right(la.base)
            if not isinstance(p, Ptr):
                raise RuntimeFault("'->' through a non-pointer value")
            return self._field(p.block, p.offset, pt.target, la.field)
        if isinstance(la, M.MDeref):
            self.rules["L6"] += 1
            p, pt = self.eval_right(la.expr)
            if not isinstance(p, Ptr):
                raise RuntimeFault("dereference of a non-pointer value")
            return p.block, p.offset, pt.target
        raise RuntimeFault(f"not a left value: {type(la).__name__}")

    def _field(self, b, off, t, fname):
        if not isinstance(t, StructType):
            raise RuntimeFault("member access on a non-struct value")
        fo = self.structs.field_offset(t.name, fname)
        if fo is None:
            raise RuntimeFault(f"field_offset({fname}) is empty for struct {t.name}")
        return b, off + fo[0], fo[1]

    def eval_right(self, ra):
        """(value, type) of a right value (R1-R11)."""
        if isinstance(ra, M.MConst):
            self.rules["R1"] += 1
            t = _lit_type(ra)
            return convert(ra.value, t, t), t
        if isinstance(ra, M.MBool):
            return int(ra.value), INT
        if isinstance(ra, M.MVar) and ra.name not in self.frame.env \
                and ra.name not in self.globals.env and ra.name in self.funcs:
            return Ptr(self.funcs[ra.name], 0), PointerType(self.func_type(ra.name))
        if isinstance(ra, (M.MVar, M.MIndex, M.MIndex2, M.MMember, M.MArrow, M.MDeref)):
            b, off, t = self.eval_left(ra)
            self.rules["R2"] += 1
            v = self.read(b, off, t)
            return v, (PointerType(t.elem) if isinstance(t, ArrayType) else t)
        if isinstance(ra, M.MAddrOf):
            self.rules["R3"] += 1
            inner = ra.expr
            if isinstance(inner, M.MVar) and inner.name not in self.frame.env \
                    and inner.name not in self.globals.env and inner.name in self.funcs:
                return Ptr(self.funcs[inner.name], 0), PointerType(self.func_type(inner.name))
            b, off, t = self.eval_left(inner)
            return Ptr(b, off), PointerType(t)
        if isinstance(ra, M.MCast):
            self.rules["R4"] += 1
            v, t = self.eval_right(ra.expr)
            return convert(v, t, ra.to), ra.to
        if isinstance(ra, M.MUnop):
            self.rules["R5"] += 1
            if ra.op == "!":
                return int(not self.eval_bool(ra.expr)), INT
            v, t = self.eval_right(ra.expr)
            try:
                rt = unop_type(ra.op, t)
            except OpTypeError as ex:
                raise RuntimeFault(str(ex)) from None
            return unary(ra.op, v, t), rt
        if isinstance(ra, M.MBinop):
            if ra.op in ("and", "or") or ra.op in ("=", "!=", "<", "<=", ">", ">="):
                return int(self.eval_bool(ra)), INT
            self.rules["R6"] += 1
            return self.arith(ra)
        if isinstance(ra, M.MIfExpr):
            rt = self.static_type(ra)
            if self.eval_bool(ra.cond):
                self.rules["R7"] += 1
                v, t = self.eval_right(ra.then)
            else:
                self.rules["R8"] += 1
                v, t = self.eval_right(ra.other)
            return (v if isinstance(rt, PointerType) else convert(v, t, rt)), rt
        if isinstance(ra, M.MPrev):
            self.rules["R9"] += 1
            if ra.depth > self.i:
                raise RuntimeFault(f"prev depth {ra.depth} exceeds state index {self.i}")
            if not self.keep_undo:
                raise RuntimeFault("prev used without history")
            saved = self.prev_depth
            self.prev_depth = saved + ra.depth
            try:
                return self.eval_right(ra.expr)
            finally:
                self.prev_depth = saved
        if isinstance(ra, M.MExtCallExpr):
            return self.call_expr(ra)
        raise RuntimeFault(f"cannot evaluate {type(ra).__name__}")

    def arith(self, ra):
        lv, lt = self.eval_right(ra.left)
        rv, rt = self.eval_right(ra.right)
        try:
            lo, ro, res, kind = _binop_type(ra.op, lt, rt, isinstance(ra.left, M.MConst),
                                            isinstance(ra.right, M.MConst),
                                            _is_null(ra.left), _is_null(ra.right))
        except OpTypeError as ex:
            raise RuntimeFault(f"no rule for {lt} {ra.op} {rt}: {ex}") from None
        if kind in ("arith", "bitwise"):
            return arith(ra.op, convert(lv, lt, lo), convert(rv, rt, ro), lo), res
        if kind == "shift":
            return arith(ra.op, convert(lv, lt, lo), rv, lo), res
        if kind in ("padd", "psub"):
            p, pt, n = (lv, lt, rv) if isinstance(lt, PointerType) else (rv, rt, lv)
            if not isinstance(p, Ptr):
                raise RuntimeFault("arithmetic on a null pointer")
            step = self.structs.sizeof(pt.target)
            n = -n if kind == "psub" else n
            return Ptr(p.block, p.offset + n * step), res
        if kind == "pdiff":
            if not (isinstance(lv, Ptr) and isinstance(rv, Ptr)) or lv.block != rv.block:
                raise RuntimeFault("pointer difference across blocks")
            return wrap_int((lv.offset - rv.offset) // self.structs.sizeof(lt.target), INT), res
        raise RuntimeFault(f"operator '{ra.op}' has no arithmetic rule")

    def eval_bool(self, b) -> bool:
        """Truth value of a Boolean expression (B1-B6); both operands of
        and/or are always evaluated."""
        if isinstance(b, M.MBool):
            self.rules["B1" if b.value else "B2"] += 1
            return b.value
        if isinstance(b, M.MUnop) and b.op == "!":
            self.rules["B4"] += 1
            return not self.eval_bool(b.expr)
        if isinstance(b, M.MBinop):
            if b.op in ("and", "or"):
                t1 = self.eval_bool(b.left)
                t2 = self.eval_bool(b.right)
                self.rules["B5" if b.op == "and" else "B6"] += 1
                return (t1 and t2) if b.op == "and" else (t1 or t2)
            if b.op in ("=", "!=", "<", "<=", ">", ">="):
                self.rules["B3"] += 1
                lv, lt = self.eval_right(b.left)
                rv, rt = self.eval_right(b.right)
                try:
                    lo, ro, _, kind = _binop_type(b.op, lt, rt, isinstance(b.left, M.MConst),
                                                  isinstance(b.right, M.MConst),
                                                  _is_null(b.left), _is_null(b.right))
                except OpTypeError as ex:
                    raise RuntimeFault(str(ex)) from None
                if kind == "cmp":
                    lv, rv = convert(lv, lt, lo), convert(rv, rt, ro)
                return bool(compare(b.op, lv, rv))
        v, _ = self.eval_right(b)
        return truth(v)

    def static_type(self, e):
        """Type of an expression without evaluating it."""
        if isinstance(e, M.MConst):
            return _lit_type(e)
        if isinstance(e, M.MBool):
            return INT
        if isinstance(e, M.MVar):
            if e.name not in self.frame.env and e.name not in self.globals.env \
                    and e.name in self.funcs:
                return PointerType(self.func_type(e.name))
            t = self.lookup(e.name)[1]
            return PointerType(t.elem) if isinstance(t, ArrayType) else t
        if isinstance(e, (M.MIndex, M.MIndex2)):
            t = self.lookup(e.name)[1]
            return t.elem if isinstance(t, ArrayType) else t.target
        if isinstance(e, M.MMember):
            bt = self.static_type(e.base)
            return self.structs.field_offset(bt.name, e.field)[1]
        if isinstance(e, M.MArrow):
            bt = self.static_type(e.base).target
            return self.structs.field_offset(bt.name, e.field)[1]
        if isinstance(e, M.MDeref):
            return self.static_type(e.expr).target
        if isinstance(e, M.MAddrOf):
            return PointerType(self.static_type(e.expr))
        if isinstance(e, M.MCast):
            return e.to
        if isinstance(e, M.MUnop):
            return INT if e.op == "!" else unop_type(e.op, self.static_type(e.expr))
        if isinstance(e, M.MBinop):
            lt, rt = self.static_type(e.left), self.static_type(e.right)
            return _binop_type(e.op, lt, rt, isinstance(e.left, M.MConst),
                               isinstance(e.right, M.MConst), _is_null(e.left),
                               _is_null(e.right))[2]
        if isinstance(e, M.MIfExpr):
            return cond_type(self.static_type(e.then), self.static_type(e.other),
                             isinstance(e.then, M.MConst), isinstance(e.other, M.MConst),
                             _is_null(e.then), _is_null(e.other))
        if isinstance(e, M.MPrev):
            return self.static_type(e.expr)
        if isinstance(e, M.MExtCallExpr):
            ft = self._callee_type(e.callee)
            return ft.ret if ft is not None else INT
        raise RuntimeFault(f"cannot type {type(e).__name__}")

    def _callee_type(self, callee):
        if isinstance(callee, M.MVar) and callee.name not in self.frame.env \
                and callee.name not in self.globals.env:
            return self.func_type(callee.name)
        t = self.static_type(callee.expr if isinstance(callee, M.MDeref) else callee)
        return t.target if isinstance(t, PointerType) else None

    def _assign_value(self, v, src, dst):
        if isinstance(dst, PointerType):
            if isinstance(v, Ptr) or v == 0:
                return v
            raise RuntimeFault("non-pointer value stored into a pointer")
        return convert(v, src, dst)

    # calls
    def resolve(self, callee):
        """Function object (MFunction or extern name) designated by callee."""
        if isinstance(callee, M.MVar) and callee.name not in self.frame.env \
                and callee.name not in self.globals.env:
            if callee.name in self.functions:
                return self.functions[callee.name]
            return callee.name
        v, _ = self.eval_right(callee.expr if isinstance(callee, M.MDeref) else callee)
        if not isinstance(v, Ptr) or v.offset != 0:
            raise RuntimeFault("call through a value that is not a function")
        blk = self.blocks.get(v.block)
        if blk is None or blk.func is None:
            raise RuntimeFault("call through a pointer that does not designate a function")
        return blk.func

    def extern_call(self, name, args):
        sig = self.sigs.get(name)
        if sig is not None:
            if len(sig.params) != len(args):
                raise RuntimeFault(f"'{name}' called with {len(args)} argument(s)")
            args = [self._assign_value(v, t, pt) for (v, t), pt in zip(args, sig.params)]
        else:
            args = [v for v, _ in args]
        steps = self.externs.steps(name)
        self.rules["EXT3" if steps > 0 else "EXT2"] += 1
        void = sig is not None and isinstance(sig.ret, VoidType)
        res = self.externs.call(name, args, void)
        if void:
            return None, VoidType()
        rt = sig.ret if sig is not None else _py_type(res)
        return convert(res, _py_type(res), rt), rt

    def enter(self, f: M.MFunction, args):
        """New activation with parameters bound by <== in the current state."""
        if len(args) != len(f.params):
            raise RuntimeFault(f"'{f.name}' called with {len(args)} argument(s)")
        fr = self.new_frame(f.name)
        for p, (v, t) in zip(f.params, args):
            b = self.alloc(fr, p.name, p.ctype)
            self.write(b, 0, p.ctype, self._assign_value(v, t, p.ctype))
        self.key_vars(fr, f.rval_type)
        return fr

    def key_vars(self, fr, rval_type):
        for k in KEY_INIT:
            b = self.alloc(fr, k, INT)
            self.write(b, 0, INT, 0)
        if rval_type is not None:
            self.alloc(fr, "RVal", rval_type)

    def side_run(self, f: M.MFunction, args):
        """Runs f over a fresh interval starting from a copy of the current
        state. Returns (final values, frame, first new block); the caller's
        state is restored."""
        saved = (self.values, self.assigned, self.framed, self.i, self.undo, self.frame,
                 self.prev_depth)
        start = self.next_block
        self.values = dict(self.values)
        self.assigned, self.framed = {}, set()
        self.i, self.undo, self.prev_depth = 0, [{}], 0
        try:
            fr = self.enter(f, args)
            self.drive(_In(fr, f.body), sub=True)
            final = self.values
        finally:
            (self.values, self.assigned, self.framed, self.i, self.undo, self.frame,
             self.prev_depth) = saved
            for b in range(start, self.next_block):
                if self.blocks[b].func is None:
                    self.blocks[b].live = False
        return final, fr, start

    def call_expr(self, e: M.MExtCallExpr):
        f = self.resolve(e.callee)
        args = [self.eval_right(a) for a in e.args]
        if isinstance(f, str):
            self.rules["R11"] += 1
            v, t = self.extern_call(f, args)
            if v is None:
                raise RuntimeFault(f"void extern '{f}' used as a value")
            return v, t
        self.rules["R10"] += 1
        if f.rval_type is None:
            raise RuntimeFault(f"'{f.name}' has no return value")
        final, fr, _ = self.side_run(f, args)
        b, t = fr.env["RVal"]
        v = final.get((b, 0), UNDEF)
        if v is UNDEF:
            raise RuntimeFault(f"'{f.name}' finished without setting RVal")
        return v, t

    def exec_call(self, s):
        """Statement calls: FUN for internal calls, EXT1-EXT3 for ext calls."""
        f = self.resolve(s.callee)
        args = [self.eval_right(a) for a in s.args]
        if isinstance(s, M.MCall):
            if isinstance(f, str):
                raise RuntimeFault(f"internal call of external function '{f}'")
            self.rules["FUN"] += 1
            fr = self.enter(f, args)
            return self.reduce(_In(fr, M.MChop(f.body, M.MNext(_Free(fr)))))
        if isinstance(f, str):
            self.extern_call(f, args)
            return EXT
        self.rules["EXT1"] += 1
        final, fr, start = self.side_run(f, args)
        shared = set(self.globals.blocks)
        writes = []
        for loc, v in final.items():
            if loc[0] >= start or _same(self.values.get(loc, UNDEF), v):
                continue
            if loc[0] not in shared:
                raise RuntimeFault(f"ext call of '{f.name}' changed caller memory "
                                   f"{self.path(loc)}")
            writes.append((loc[0], loc[1], v))
        return Next(_Present(tuple(writes))) if writes else EXT

    # declarations
    def declare(self, d: M.MDecl):
        for it in d.items:
            b = self.alloc(self.frame, it.name, it.ctype)
            if it.init is None:
                continue
            if isinstance(it.ctype, ArrayType):
                cells = self._flat_init(it.ctype, it.init)
                esz = self.structs.sizeof(it.ctype.elem)
                for k, e in enumerate(cells):
                    v, t = (0, INT) if e is None else self.eval_right(e)
                    self.write(b, k * esz, it.ctype.elem,
                               self._assign_value(v, t, it.ctype.elem))
            else:
                v, t = self.eval_right(it.init)
                self.write(b, 0, it.ctype, self._assign_value(v, t, it.ctype))

    @staticmethod
    def _flat_init(t: ArrayType, il):
        total = 1
        for d in t.dims:
            total *= d
        items = list(il.items)
        if len(t.dims) == 2 and items and all(isinstance(r, M.MInitList) for r in items):
            out = []
            for r in items:
                out.extend(list(r.items) + [None] * (t.dims[1] - len(r.items)))
        else:
            out = items
        return out + [None] * (total - len(out))

    # reduction within a state
    def reduce_in_state(self, p):
        """Rewrites p in the current state; returns its normal form."""
        return self.reduce(p)

    def reduce(self, p) -> _NF:
        if isinstance(p, M.MEmpty):
            return EMPTY
        if isinstance(p, M.MSkip):
            self.rules["SKIP"] += 1
            return Next(M.MEmpty())
        if isinstance(p, M.MChop):
            if isinstance(p.left, M.MAlways) and isinstance(p.left.body, M.MMore):
                self.rules["CHOP4"] += 1
                return self.reduce(p.left)
            nf = self.reduce(p.left)
            if nf.kind == "next":
                self.rules["CHOP2"] += 1
                return Next(M.MChop(nf.body, p.right))
            if nf is EXT:
                self.rules["CHOP2"] += 1
                return Next(p.right)
            if nf.kind == "always":
                self.rules["ALW1"] += 1
            self.rules["CHOP3" if nf is EMPTY else "CHOP1"] += 1
            return self.reduce(p.right)
        if isinstance(p, M.MAnd):
            self.rules["AND"] += 1
            for a, b in ((p.left, p.right), (p.right, p.left)):
                if isinstance(a, M.MFalse):
                    self.rules["F1"] += 1
                    raise Infeasible(f"false in state {self.i}")
                if isinstance(a, M.MTrue):
                    self.rules["T1"] += 1
                    return self.reduce(b)
            return self.conj(self.reduce(p.left), self.reduce(p.right))
        if isinstance(p, M.MTrue):
            return ANY
        if isinstance(p, M.MFalse):
            self.rules["F1"] += 1
            raise Infeasible(f"false in state {self.i}")
        if isinstance(p, M.MMore):
            return Next(M.MTrue())
        if isinstance(p, M.MAlways):
            return self.conj(Always(p.body), self.reduce(p.body))
        if isinstance(p, M.MUnitAssign):
            self.rules["UASS"] += 1
            b, off, t = self.eval_left(p.target)
            v, vt = self.eval_right(p.value)
            return Next(_Present(((b, off, self._assign_value(v, vt, t)),)))
        if isinstance(p, _Present):
            for b, off, v in p.writes:
                blk = self.blocks.get(b)
                t = blk.layout[off][1] if blk and off in blk.layout else INT
                self.write(b, off, t, v)
            return EMPTY
        if isinstance(p, M.MAssign):
            b, off, t = self.eval_left(p.target)
            v, vt = self.eval_right(p.value)
            self.write(b, off, t, self._assign_value(v, vt, t))
            return ANY
        if isinstance(p, M.MIf):
            # (b and ms1) or (!b and ms2): b or !b is true (T3), the arm whose
            # guard is false drops out (F1, F2) and true vanishes (T1)
            self.rules["IF"] += 1
            for r in ("T3", "T1", "F1", "F2"):
                self.rules[r] += 1
            return self.reduce(p.then if self.eval_bool(p.cond) else p.other)
        if isinstance(p, M.MWhile):
            while True:
                self.rules["WHL"] += 1
                self.tick()
                if not self.eval_bool(p.cond):
                    return EMPTY
                nf = self.reduce(p.body)
                if nf.kind == "next":
                    return Next(M.MChop(nf.body, p))
                if nf is EXT:
                    return Next(p)
        if isinstance(p, M.MNext):
            self.rules["NEXT"] += 1
            return Next(p.body)
        if isinstance(p, M.MDecl):
            self.declare(p)
            return ANY
        if isinstance(p, (M.MCall, M.MExtCall)):
            return self.exec_call(p)
        if isinstance(p, _In):
            saved = self.frame
            self.frame = p.frame
            try:
                nf = self.reduce(p.body)
            finally:
                self.frame = saved
            if nf.kind == "next":
                body = nf.body
                if not (isinstance(body, _In) and body.frame is p.frame) \
                        and not isinstance(body, M.MEmpty):
                    body = _In(p.frame, body)
                return Next(body)
            return nf
        if isinstance(p, _Free):
            for b in p.frame.blocks:
                self.blocks[b].live = False
                self.values.pop((b, 0), None)
                for off in self.blocks[b].layout:
                    self.values.pop((b, off), None)
            return EMPTY
        raise RuntimeFault(f"cannot reduce {type(p).__name__}")

    def conj(self, a: _NF, b: _NF) -> _NF:
        if a.kind == "always" or b.kind == "always":
            return self.always(a, b)
        if a.kind == "next" and b.kind == "next":
            return Next(M.MAnd(a.body, b.body))
        if a is ANY:
            return b
        if b is ANY:
            return a
        if a is EXT:
            return b
        if b is EXT:
            return a
        if a is EMPTY and b is EMPTY:
            return EMPTY
        self.rules["F1"] += 1
        raise Infeasible("empty conjoined with next")

    def always(self, a: _NF, b: _NF) -> _NF:
        """always ms next to another normal form: ALW(1) when the interval
        ends here, ALW(2) when it goes on."""
        if b.kind == "always":
            a, b = b, a
        if b.kind == "always":
            return Always(M.MAnd(a.body, b.body))
        if b is EMPTY:
            self.rules["ALW1"] += 1
            return EMPTY
        if b.kind == "next":
            self.rules["ALW2"] += 1
            return Next(M.MAnd(b.body, M.MAlways(a.body)))
        if b is EXT:
            self.rules["ALW2"] += 1
            return Next(M.MAlways(a.body))
        return a

    # transitions
    def transition(self, nf):
        """TR1 for next ms, TR2 for empty. Returns the next program or True."""
        if self.record:
            self.interval.states.append(self.dump_state())
        self.interval.length += 1
        if nf.kind == "next":
            self.rules["TR1"] += 1
            self.tick()
            self.i += 1
            self.assigned, self.framed = {}, set()
            if self.keep_undo:
                self.undo.append({})
            return nf.body
        self.rules["TR2"] += 1
        return True

    def drive(self, p, sub=False):
        """Reduces and transitions until the final configuration."""
        outer = self.interval
        if sub:
            self.interval = Interval()
        try:
            while True:
                nf = self.reduce(p)
                if nf.kind == "always":
                    self.rules["ALW1"] += 1
                    nf = EMPTY
                if nf is ANY:
                    nf = EMPTY
                elif nf is EXT:
                    nf = Next(M.MEmpty())
                p = self.transition(nf)
                if p is True:
                    return Configuration(True, self.interval, None, self.interval.length + 1)
        finally:
            if sub:
                self.interval = outer

    def dump_state(self):
        vals = {}
        for b, blk in self.blocks.items():
            if not blk.live or blk.func is not None:
                continue
            for off, (path, _) in blk.layout.items():
                vals[path] = fmt_value(self.values.get((b, off), UNDEF))
        return {"i": self.i, "values": vals,
                "assigned": sorted(self.path(loc) for loc in self.assigned)}

    # whole programs
    def globals_stmt(self):
        return M.chop([_In(self.globals, d) for d in self.prog.decls
                       if not isinstance(d, M.MStruct)])

    def program_stmt(self, top: Frame):
        return M.chop([self.globals_stmt(), _In(top, self.prog.body)])

    def snapshot(self, top: Frame):
        snap = MsvlSnapshot(funcs=dict(self.funcs))
        for scope, fr in (("global", self.globals), ("main", top)):
            for name, (b, t) in fr.env.items():
                snap.vars[(scope, name)] = (b, t)
                for suf, off, _ in self.structs.leaves(t):
                    snap.values[(scope, name + suf)] = self.values.get((b, off), UNDEF)
        return snap

    def run(self) -> MsvlResult:
        res = MsvlResult("terminates")
        try:
            top = self.new_frame("main")
            self.key_vars(top, INT)
            final = self.drive(self.program_stmt(top))
            res.final = final
            res.snapshot = self.snapshot(top)
            code = self.values.get((top.env["RVal"][0], 0), UNDEF)
            if code is UNDEF and self.require_exit:
                raise RuntimeFault("main finished without returning a value")
            res.exit_code = None if code is UNDEF else code
        except Timeout as ex:
            res.status, res.error = "timeout", str(ex)
        except Infeasible as ex:
            res.status, res.error = "infeasible", str(ex)
        except RuntimeFault as ex:
            res.status, res.error = "error", ex.message
        except RecursionError:
            res.status, res.error = "error", "recursion too deep"
        if res.status != "terminates":
            res.snapshot = None
        res.events = list(self.externs.events)
        res.interval = self.interval
        res.rules = self.rules
        res.steps = self.steps
        return res


def run_msvl(prog: M.MProgram, fuel=DEFAULT_FUEL, externs: ExternModel | None = None,
             extern_sigs: dict | None = None, record=False, require_exit=True) -> MsvlResult:
    """Runs prog from its first state. Hand-written programs that never set
    the top-level RVal pass require_exit=False and finish with no exit code."""
    return deep_call(lambda: Machine(prog, fuel, externs, extern_sigs, record,
                                     require_exit).run())


def dump_interval(interval: Interval) -> str:
    """One JSON object per state."""
    return "".join(json.dumps(s, sort_keys=True) + "\n" for s in interval.states)
