"""Big-step reference interpreter for Xd-C.

Memory is a set of blocks with bounds [0, size) holding typed cells; a
location is a (block, offset) pair. Statements evaluate to an outcome
(Normal, Break, Continue, Return, Return(v)) and an updated memory. Each rule
application is counted, and a fuel budget bounds the number of statement
steps so that divergence shows up as a timeout.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .deep import deep_call
from .diagnostics import RuntimeFault, Timeout
from .externs import ExternModel
from .types import (INT, ArrayType, CType, FloatType, IntType, PointerType,
                    StructTable, StructType, VoidType, chunk_of)
from .values import UNDEF, Ptr, arith, compare, convert, truth, unary, wrap_int
from .xdc import ast as A
from .xdc.typecheck import ProgramInfo, literal_type

DEFAULT_FUEL = 1_000_000
CHUNK_SIZE = {"int8signed": 1, "int8unsigned": 1, "int16signed": 2, "int16unsigned": 2,
              "int32": 4, "float32": 4, "float64": 8}


class Outcome:
    __slots__ = ("kind", "value")

    def __init__(self, kind, value=None):
        self.kind = kind
        self.value = value

    def __repr__(self):
        return self.kind if self.value is None else f"{self.kind}({self.value})"


NORMAL = Outcome("Normal")
BREAK = Outcome("Break")
CONTINUE = Outcome("Continue")
RETURN = Outcome("Return")


@dataclass
class Block:
    size: int
    cells: dict = field(default_factory=dict)  # offset -> (chunk, value)
    freed: bool = False
    func: object = None  # FuncDef for function blocks


class Memory:
    """Blocks are numbered from 1 and never reused."""

    def __init__(self):
        self.blocks: dict[int, Block] = {}
        self.next = 1

    def alloc(self, size, func=None):
        b = self.next
        self.next += 1
        self.blocks[b] = Block(size, func=func)
        return b

    def free(self, b):
        self.blocks[b].freed = True

    def _block(self, b, off, n):
        blk = self.blocks.get(b)
        if blk is None or blk.freed:
            raise RuntimeFault(f"access to {'freed' if blk else 'invalid'} block {b}")
        if blk.func is not None:
            raise RuntimeFault("data access to a function")
        if off < 0 or off + n > blk.size:
            raise RuntimeFault(f"out-of-bounds access at ({b},{off})")
        return blk

    def load(self, chunk, b, off):
        n = CHUNK_SIZE[chunk]
        blk = self._block(b, off, n)
        cell = blk.cells.get(off)
        if cell is not None and cell[0] == chunk:
            return cell[1]
        for o, (c, _) in blk.cells.items():
            if o < off + n and off < o + CHUNK_SIZE[c]:
                raise RuntimeFault(f"mismatched access at ({b},{off})")
        return UNDEF

    def store(self, chunk, b, off, v):
        n = CHUNK_SIZE[chunk]
        blk = self._block(b, off, n)
        for o in [o for o, (c, _) in blk.cells.items()
                  if o != off and o < off + n and off < o + CHUNK_SIZE[c]]:
            del blk.cells[o]
        blk.cells[off] = (chunk, v)


@dataclass
class Snapshot:
    """Final observable state: variables and the values of their scalar cells."""
    vars: dict = field(default_factory=dict)    # (scope, name) -> (block, type)
    values: dict = field(default_factory=dict)  # (scope, path) -> value
    funcs: dict = field(default_factory=dict)   # function name -> block


@dataclass
class RunResult:
    status: str  # terminates | timeout | error
    exit_code: int | None = None
    events: list = field(default_factory=list)
    snapshot: Snapshot | None = None
    error: str | None = None
    rules: Counter = field(default_factory=Counter)
    steps: int = 0
    stores: list = field(default_factory=list)


class Interpreter:
    def __init__(self, prog: A.Program, info: ProgramInfo, fuel=DEFAULT_FUEL,
                 externs: ExternModel | None = None, trace_stores=False):
        self.prog = prog
        self.info = info
        self.structs: StructTable = info.structs
        self.fuel = fuel
        self.steps = 0
        self.externs = externs if externs is not None else ExternModel()
        self.mem = Memory()
        self.globals: dict[str, tuple[int, CType]] = {}
        self.funcs: dict[str, int] = {}
        self.rules = Counter()
        self.trace_stores = trace_stores
        self.stores = []
        self.pure_marks: list[int] = []
        self.snapshot: Snapshot | None = None

    # bookkeeping
    def tick(self):
        self.steps += 1
        if self.steps > self.fuel:
            raise Timeout(f"fuel {self.fuel} exhausted")

    def sizeof(self, t):
        return self.structs.sizeof(t)

    # memory access by type (access modes)
    def loadval(self, t, b, off):
        if isinstance(t, ArrayType):
            return Ptr(b, off)
        chunk = chunk_of(t)
        if chunk is None:
            raise RuntimeFault(f"value of type {t} cannot be loaded")
        v = self.mem.load(chunk, b, off)
        if v is UNDEF:
            raise RuntimeFault(f"read of uninitialised memory at ({b},{off})")
        return v

    def storeval(self, t, b, off, v):
        chunk = chunk_of(t)
        if chunk is None:
            raise RuntimeFault(f"value of type {t} cannot be stored")
        if self.pure_marks and b < self.pure_marks[-1]:
            raise RuntimeFault("function called in an expression changed memory")
        self.mem.store(chunk, b, off, v)
        if self.trace_stores:
            self.stores.append({"store": [b, off], "value": v})

    # environments
    def lookup(self, name, env):
        self.rules["C1"] += 1
        if name in env:
            return env[name]
        if name in self.globals:
            return self.globals[name]
        raise RuntimeFault(f"unbound identifier '{name}'")

    # left values
    def lvalue(self, e, env):
        """Location (block, offset) and object type of a left value."""
        if isinstance(e, A.Var):
            b, t = self.lookup(e.name, env)
            return b, 0, t
        if isinstance(e, A.Index):
            self.rules["C13"] += 1
            base = self.rvalue(A.Var(e.name), env)
            et = self._elem_type(e.name, env)
            i = self.rvalue(e.index, env)
            return self._deref(self._padd(base, i, et), et)
        if isinstance(e, A.Index2):
            self.rules["C14"] += 1
            b, off, t = self.lvalue(A.Var(e.name), env)
            n = t.dims[1]
            i = self.rvalue(e.i, env)
            j = self.rvalue(e.j, env)
            p = self._padd(Ptr(b, off), i * n + j, t.elem)
            return self._deref(p, t.elem)
        if isinstance(e, A.Member):
            self.rules["C3"] += 1
            b, off, t = self.lvalue(e.base, env)
            return self._field(b, off, t, e.field)
        if isinstance(e, A.Arrow):
            self.rules["C15"] += 1
            p = self.rvalue(e.base, env)
            b, off = self._deref(p, e.base.ctype.target)[:2]
            return self._field(b, off, e.base.ctype.target, e.field)
        if isinstance(e, A.Deref):
            self.rules["C2"] += 1
            p = self.rvalue(e.expr, env)
            return self._deref(p, e.ctype)
        raise RuntimeFault(f"not a left value: {type(e).__name__}")

    def _elem_type(self, name, env):
        _, t = env[name] if name in env else self.globals[name]
        return t.elem if isinstance(t, ArrayType) else t.target

    def _field(self, b, off, t, fname):
        if not isinstance(t, StructType):
            raise RuntimeFault("member access on a non-struct object")
        fo = self.structs.field_offset(t.name, fname)
        if fo is None:
            raise RuntimeFault(f"field_offset({t.name}, {fname}) is undefined")
        return b, off + fo[0], fo[1]

    def _deref(self, p, t):
        if not isinstance(p, Ptr):
            raise RuntimeFault("dereference of a non-pointer value")
        return p.block, p.offset, t

    def _padd(self, p, n, target):
        if not isinstance(p, Ptr):
            raise RuntimeFault("arithmetic on a null pointer")
        return Ptr(p.block, p.offset + n * self.sizeof(target))

    # right values
    def rvalue(self, e, env):
        if isinstance(e, A.Const):
            self.rules["C4"] += 1
            return convert(e.value, literal_type(e), literal_type(e))
        if isinstance(e, A.Var):
            if e.name not in env and e.name not in self.globals and e.name in self.funcs:
                return Ptr(self.funcs[e.name], 0)
        if isinstance(e, (A.Var, A.Index, A.Index2, A.Member, A.Arrow, A.Deref)):
            b, off, t = self.lvalue(e, env)
            self.rules["C5"] += 1
            return self.loadval(t, b, off)
        if isinstance(e, A.AddrOf):
            self.rules["C6"] += 1
            inner = e.expr
            if isinstance(inner, A.Var) and inner.name not in env \
                    and inner.name not in self.globals and inner.name in self.funcs:
                return Ptr(self.funcs[inner.name], 0)
            b, off, _ = self.lvalue(inner, env)
            return Ptr(b, off)
        if isinstance(e, A.Unop):
            self.rules["C7"] += 1
            return unary(e.op, self.rvalue(e.expr, env), e.expr.ctype)
        if isinstance(e, A.Binop):
            self.rules["C8"] += 1
            a = self.rvalue(e.left, env)
            b = self.rvalue(e.right, env)
            return self.binop(e.op, a, e.left.ctype, b, e.right.ctype, e.optype)
        if isinstance(e, A.Cond):
            c = self.rvalue(e.cond, env)
            if truth(c):
                self.rules["C9"] += 1
                br = e.then
            else:
                self.rules["C10"] += 1
                br = e.other
            return self._conv(self.rvalue(br, env), br.ctype, e.ctype)
        if isinstance(e, A.Cast):
            self.rules["C11"] += 1
            return convert(self.rvalue(e.expr, env), e.expr.ctype, e.to)
        if isinstance(e, A.Call):
            self.rules["C12"] += 1
            self.pure_marks.append(self.mem.next)
            try:
                return self.call(e, env)
            finally:
                self.pure_marks.pop()
        raise RuntimeFault(f"cannot evaluate {type(e).__name__}")

    def _conv(self, v, src, dst):
        if isinstance(dst, PointerType):
            return v
        return convert(v, src, dst)

    def binop(self, op, a, lt, b, rt, optype):
        lo, ro, kind = optype
        if kind == "logic":
            x, y = truth(a), truth(b)
            return int(x and y) if op in ("&&", "and") else int(x or y)
        if kind == "cmp":
            return compare(op, convert(a, lt, lo), convert(b, rt, ro))
        if kind == "pcmp":
            return compare(op, a, b)
        if kind in ("arith", "bitwise"):
            return arith(op, convert(a, lt, lo), convert(b, rt, ro), lo)
        if kind == "shift":
            return arith(op, convert(a, lt, lo), b, lo)
        if kind == "padd":
            if isinstance(lt, PointerType):
                return self._padd(a, b, lt.target)
            return self._padd(b, a, rt.target)
        if kind == "psub":
            return self._padd(a, -b, lt.target)
        if kind == "pdiff":
            if not (isinstance(a, Ptr) and isinstance(b, Ptr)) or a.block != b.block:
                raise RuntimeFault("difference of pointers into different blocks")
            return wrap_int((a.offset - b.offset) // self.sizeof(lt.target), INT)
        raise RuntimeFault(f"no rule for {lt} {op} {rt}")

    # calls
    def call(self, c: A.Call, env):
        self.rules["T24"] += 1
        fv = self.rvalue(c.callee, env) if not isinstance(c.callee, A.Deref) \
            else self.rvalue(c.callee.expr, env)
        if not isinstance(fv, Ptr) or fv.offset != 0:
            raise RuntimeFault("call through a value that is not a function")
        blk = self.mem.blocks.get(fv.block)
        if blk is None or blk.func is None:
            raise RuntimeFault("call through a pointer that does not designate a function")
        f = blk.func
        args = [self.rvalue(a, env) for a in c.args]
        return self.invoke(f, args)

    def invoke(self, f: A.FuncDef, args):
        ptypes = [p.ctype for p in f.params]
        if len(args) != len(ptypes):
            raise RuntimeFault(f"'{f.name}' called with {len(args)} argument(s)")
        if f.body is None:
            self.rules["T26"] += 1
            vals = [self._conv_arg(v, t) for v, t in zip(args, ptypes)]
            res = self.externs.call(f.name, vals, isinstance(f.ret, VoidType))
            if isinstance(f.ret, VoidType):
                return None
            return convert(res, _py_type(res), f.ret)
        self.rules["T25"] += 1
        env = {}
        blocks = []
        for p, v in zip(f.params, args):
            b = self.mem.alloc(self.sizeof(p.ctype))
            blocks.append(b)
            env[p.name] = (b, p.ctype)
            self.storeval(p.ctype, b, 0, self._conv_arg(v, p.ctype))
        try:
            for d in f.locals:
                if isinstance(d, A.VarDecl):
                    for it in d.items:
                        b = self.mem.alloc(self.sizeof(it.ctype))
                        blocks.append(b)
                        env[it.name] = (b, it.ctype)
                        if it.init is not None:
                            self.init_object(b, it.ctype, it.init, env)
            out = self.exec(f.body, env)
            if out.kind == "Return" and out.value is not None:
                v, vt = out.value
                res = self._assign_conv(v, vt, f.ret)
            elif isinstance(f.ret, VoidType):
                res = None
            else:
                raise RuntimeFault(f"'{f.name}' finished without returning a value")
            if f is self.prog.main:
                self.take_snapshot(env)
            return res
        finally:
            for b in blocks:
                self.mem.free(b)

    def _conv_arg(self, v, t):
        if isinstance(t, PointerType):
            if isinstance(v, Ptr) or v == 0:
                return v
            raise RuntimeFault("integer passed for a pointer parameter")
        return convert(v, _py_type(v), t)

    # initialisation
    def init_object(self, b, t, init, env):
        if isinstance(t, ArrayType):
            cells = _flatten_init(t, init)
            esz = self.sizeof(t.elem)
            for k, e in enumerate(cells):
                v = 0 if e is None else self.rvalue(e, env)
                src = INT if e is None else e.ctype
                self.storeval(t.elem, b, k * esz, self._assign_conv(v, src, t.elem))
            return
        v = self.rvalue(init, env)
        self.storeval(t, b, 0, self._assign_conv(v, init.ctype, t))

    def _assign_conv(self, v, src, dst):
        if isinstance(dst, PointerType):
            return v
        return convert(v, src, dst)

    # statements
    def exec(self, s: A.Stmt, env) -> Outcome:
        items = A.flatten(s) if isinstance(s, A.Seq) else [s]
        last = len(items) - 1
        for k, st in enumerate(items):
            out = self.exec_one(st, env)
            if k < last:
                if out is NORMAL:
                    self.rules["T7"] += 1
                else:
                    self.rules["T8"] += 1
                    return out
        return out

    def exec_one(self, s, env) -> Outcome:
        self.tick()
        if isinstance(s, A.Null):
            self.rules["T1"] += 1
            return NORMAL
        if isinstance(s, A.Break):
            self.rules["T2"] += 1
            return BREAK
        if isinstance(s, A.Continue):
            self.rules["T3"] += 1
            return CONTINUE
        if isinstance(s, A.Return):
            if s.value is None:
                self.rules["T4"] += 1
                return RETURN
            self.rules["T5"] += 1
            v = self.rvalue(s.value, env)
            return Outcome("Return", (v, s.value.ctype))
        if isinstance(s, A.Assign):
            self.rules["T6"] += 1
            b, off, t = self.lvalue(s.target, env)
            v = self.rvalue(s.value, env)
            self.storeval(t, b, off, self._assign_conv(v, s.value.ctype, t))
            return NORMAL
        if isinstance(s, (A.PostInc, A.PostDec)):
            self.rules["T6"] += 1
            b, off, t = self.lvalue(s.target, env)
            v = self.loadval(t, b, off)
            step = 1 if isinstance(s, A.PostInc) else -1
            if isinstance(t, PointerType):
                nv = self._padd(v, step, t.target)
            else:
                nv = arith("+", v, convert(step, INT, t), t)
            self.storeval(t, b, off, nv)
            return NORMAL
        if isinstance(s, A.If):
            if truth(self.rvalue(s.cond, env)):
                self.rules["T9"] += 1
                return self.exec(s.then, env)
            self.rules["T10"] += 1
            return self.exec(s.other, env)
        if isinstance(s, A.While):
            return self.loop(s.cond, s.body, None, env)
        if isinstance(s, A.Do):
            self.rules["DO"] += 1
            out = self.exec(s.body, env)
            if out is not NORMAL and out is not CONTINUE:
                return NORMAL if out is BREAK else out
            return self.loop(s.cond, s.body, None, env)
        if isinstance(s, A.For):
            if not isinstance(s.init, A.Null):
                self.rules["T14"] += 1
                self.exec(s.init, env)
            return self.loop(s.cond, s.body, s.step, env, for_rules=True)
        if isinstance(s, A.Switch):
            return self.switch(s, env)
        if isinstance(s, A.CallStmt):
            self.call(s.call, env)
            return NORMAL
        raise RuntimeFault(f"cannot execute {type(s).__name__}")

    def loop(self, cond, body, step, env, for_rules=False):
        r_false, r_exit, r_again = ("T15", "T16", "T17") if for_rules else ("T11", "T12", "T13")
        while True:
            if cond is not None and not truth(self.rvalue(cond, env)):
                self.rules[r_false] += 1
                return NORMAL
            out = self.exec(body, env)
            if out is NORMAL or out is CONTINUE:
                if step is not None:
                    self.exec(step, env)
                self.rules[r_again] += 1
                self.tick()
                continue
            self.rules[r_exit] += 1
            return NORMAL if out is BREAK else out

    def switch(self, s: A.Switch, env):
        v = self.rvalue(s.expr, env)
        t = s.expr.ctype
        start = len(s.cases) - 1
        for k, c in enumerate(s.cases):
            if c.value is not None and convert(c.value, INT, t) == v:
                start = k
                break
        self.rules["T22" if s.cases[start].value is not None else "T23"] += 1
        out = NORMAL
        for c in s.cases[start:]:
            self.rules["T19" if c.value is not None else "T18"] += 1
            out = self.exec(c.body, env)
            if out is not NORMAL:
                self.rules["T21"] += 1
                break
            if c is not s.cases[-1]:
                self.rules["T20"] += 1
        return NORMAL if out is BREAK else out

    # program
    def setup(self):
        for f in self.prog.functions:
            if f.name not in self.funcs:
                fd = self.info.functions.get(f.name, f)
                self.funcs[f.name] = self.mem.alloc(1, func=fd)
        for d in self.prog.decls:
            if isinstance(d, A.VarDecl):
                for it in d.items:
                    b = self.mem.alloc(self.sizeof(it.ctype))
                    self.globals[it.name] = (b, it.ctype)
                    if it.init is not None:
                        self.init_object(b, it.ctype, it.init, {})

    def take_snapshot(self, main_env):
        snap = Snapshot(funcs=dict(self.funcs))
        for scope, table in (("global", self.globals), ("main", main_env)):
            for name, (b, t) in table.items():
                snap.vars[(scope, name)] = (b, t)
                for path, off, lt in self.structs.leaves(t, name):
                    chunk = chunk_of(lt)
                    v = self.mem.load(chunk, b, off) if chunk else UNDEF
                    snap.values[(scope, path)] = v
        self.snapshot = snap

    def run(self) -> RunResult:
        res = RunResult("terminates")
        try:
            self.setup()
            main = self.prog.main
            code = self.invoke(main, [])
            res.exit_code = code
        except Timeout as ex:
            res.status, res.error = "timeout", str(ex)
        except RuntimeFault as ex:
            res.status, res.error = "error", ex.message
        except RecursionError:
            res.status, res.error = "error", "recursion too deep"
        res.events = list(self.externs.events)
        res.snapshot = self.snapshot if res.status == "terminates" else None
        res.rules = self.rules
        res.steps = self.steps
        res.stores = self.stores
        return res


def _py_type(v):
    if isinstance(v, float):
        return FloatType("double")
    if isinstance(v, Ptr):
        return PointerType(VoidType())
    return IntType("long")


def _flatten_init(t: ArrayType, il: A.InitList):
    """Element initialisers in row-major order; None for implicit zeros."""
    total = 1
    for d in t.dims:
        total *= d
    if len(t.dims) == 2 and il.items and all(isinstance(r, A.InitList) for r in il.items):
        m = t.dims[1]
        out = []
        for r in il.items:
            out.extend(list(r.items) + [None] * (m - len(r.items)))
    else:
        out = list(il.items)
    return out + [None] * (total - len(out))


def run_program(prog: A.Program, info: ProgramInfo, fuel=DEFAULT_FUEL,
                externs: ExternModel | None = None, trace_stores=False) -> RunResult:
    return deep_call(lambda: Interpreter(prog, info, fuel, externs, trace_stores).run())

