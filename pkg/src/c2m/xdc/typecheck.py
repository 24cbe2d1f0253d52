"""Type checker for Xd-C: annotates every expression with its type and
collects type errors as diagnostics."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..diagnostics import Diagnostic, TypeCheckError
from ..optype import (OpTypeError, assignable, binop_type, cast_ok, cond_type,
                      unop_type)
from ..types import (INT, ArrayType, CType, FloatType, FuncType, IntType, PointerType,
                     StructTable, StructType, VoidType, is_fptr)
from . import ast as A

_LIT_TYPES = {"int": INT, "uint": IntType("int", False), "long": IntType("long"),
              "char": INT, "float": FloatType("float"), "double": FloatType("double")}


@dataclass
class ProgramInfo:
    """Symbol information produced by the checker, reused downstream."""
    structs: StructTable
    globals: dict = field(default_factory=dict)     # name -> type
    functions: dict = field(default_factory=dict)   # name -> FuncDef (definition if any)
    externs: set = field(default_factory=set)
    locals: dict = field(default_factory=dict)      # function name -> {name: type}


def literal_type(c: A.Const) -> CType:
    return _LIT_TYPES[c.lit]


def is_literal(e):
    return isinstance(e, A.Const)


def is_null(e):
    return isinstance(e, A.Const) and e.value == 0 and e.lit in ("int", "uint", "long")


class _Halt(Exception):
    pass


class Checker:
    def __init__(self, prog: A.Program):
        self.prog = prog
        self.diags: list[Diagnostic] = []
        self.info = ProgramInfo(StructTable())
        self.scope: dict[str, CType] = {}
        self.func: A.FuncDef | None = None
        self.loops = 0
        self.switches = 0

    def err(self, msg, span):
        self.diags.append(Diagnostic(msg, span, filename=self.prog.filename))
        raise _Halt()

    def soft(self, fn, *args):
        try:
            return fn(*args)
        except _Halt:
            return None

    # types
    def check_type(self, t, span, where="variable"):
        if isinstance(t, StructType):
            if t.name not in self.info.structs.structs:
                self.err(f"struct '{t.name}' is not defined", span)
        elif isinstance(t, PointerType):
            if isinstance(t.target, StructType):
                return  # pointer to a struct may precede its definition
            self.check_type(t.target, span, "pointer")
        elif isinstance(t, ArrayType):
            if len(t.dims) > 2:
                self.err("arrays have at most two dimensions", span)
            if any(d is None or d <= 0 for d in t.dims):
                self.err("array extents must be positive", span)
            if isinstance(t.elem, (ArrayType, VoidType)):
                self.err("invalid array element type", span)
            self.check_type(t.elem, span)
        elif isinstance(t, FuncType):
            self.check_type(t.ret, span, "return")
            for p in t.params:
                self.check_type(p, span, "parameter")
        elif isinstance(t, VoidType) and where not in ("pointer", "return"):
            self.err(f"{where} of type void", span)

    def lookup(self, name, span):
        if name in self.scope:
            return self.scope[name]
        if name in self.info.globals:
            return self.info.globals[name]
        if name in self.info.functions:
            return PointerType(self.info.functions[name].ftype)
        self.err(f"undeclared identifier '{name}'", span)

    # expressions
    def expr(self, e: A.Expr) -> CType:
        t = self._expr(e)
        e.ctype = t
        return t

    def _expr(self, e):
        if isinstance(e, A.Const):
            return literal_type(e)
        if isinstance(e, A.Var):
            t = self.lookup(e.name, e.span)
            if isinstance(t, ArrayType):
                if len(t.dims) != 1:
                    self.err(f"two-dimensional array '{e.name}' used as a value", e.span)
                return PointerType(t.elem)
            return t
        if isinstance(e, A.Index):
            t = self.lookup(e.name, e.span)
            it = self.expr(e.index)
            if not it.is_integer():
                self.err("array index must be an integer", e.index.span)
            if isinstance(t, ArrayType) and len(t.dims) == 1:
                return t.elem
            if isinstance(t, PointerType) and not isinstance(t.target, (VoidType, FuncType)):
                return t.target
            self.err(f"'{e.name}' is not a one-dimensional array or pointer", e.span)
        if isinstance(e, A.Index2):
            t = self.lookup(e.name, e.span)
            for ix in (e.i, e.j):
                if not self.expr(ix).is_integer():
                    self.err("array index must be an integer", ix.span)
            if isinstance(t, ArrayType) and len(t.dims) == 2:
                return t.elem
            self.err(f"'{e.name}' is not a two-dimensional array", e.span)
        if isinstance(e, (A.Member, A.Arrow)):
            bt = self.lvalue_type(e.base) if isinstance(e, A.Member) else self.expr(e.base)
            if isinstance(e, A.Arrow):
                if not (isinstance(bt, PointerType) and isinstance(bt.target, StructType)):
                    self.err("'->' applied to a non struct pointer", e.span)
                bt = bt.target
            if not isinstance(bt, StructType):
                self.err("member access on a non-struct value", e.span)
            if bt.name not in self.info.structs.structs:
                self.err(f"struct '{bt.name}' is not defined", e.span)
            fo = self.info.structs.field_offset(bt.name, e.field)
            if fo is None:
                self.err(f"struct '{bt.name}' has no field '{e.field}' (field_offset = ∅)",
                         e.span)
            return fo[1]
        if isinstance(e, A.Deref):
            t = self.expr(e.expr)
            if not isinstance(t, PointerType) or isinstance(t.target, VoidType):
                self.err("dereference of a non-pointer value", e.span)
            return t.target
        if isinstance(e, A.AddrOf):
            inner = e.expr
            if isinstance(inner, A.Var) and inner.name in self.info.functions \
                    and inner.name not in self.scope and inner.name not in self.info.globals:
                t = self.expr(inner)
                return t
            if not self.is_lvalue(inner):
                self.err("'&' needs an lvalue", e.span)
            t = self.lvalue_type(inner)
            if isinstance(t, ArrayType):
                self.err("address of a whole array is not supported", e.span)
            return PointerType(t)
        if isinstance(e, A.Cast):
            st = self.expr(e.expr)
            if not cast_ok(e.to, st):
                self.err(f"cast from {st} to {e.to} is not allowed", e.span)
            return e.to
        if isinstance(e, A.Unop):
            t = self.expr(e.expr)
            try:
                return unop_type(e.op, t)
            except OpTypeError as ex:
                self.err(str(ex), e.span)
        if isinstance(e, A.Binop):
            lt = self.expr(e.left)
            rt = self.expr(e.right)
            try:
                lo, ro, res, kind = binop_type(e.op, lt, rt, is_literal(e.left),
                                               is_literal(e.right), is_null(e.left),
                                               is_null(e.right))
            except OpTypeError as ex:
                self.err(str(ex), e.span)
            e.optype = (lo, ro, kind)
            return res
        if isinstance(e, A.Cond):
            ct = self.expr(e.cond)
            if not ct.is_scalar():
                self.err("condition must be scalar", e.cond.span)
            at = self.expr(e.then)
            bt = self.expr(e.other)
            try:
                return cond_type(at, bt, is_literal(e.then), is_literal(e.other),
                                 is_null(e.then), is_null(e.other))
            except OpTypeError as ex:
                self.err(str(ex), e.span)
        if isinstance(e, A.Call):
            return self.call(e)
        if isinstance(e, A.InitList):
            self.err("brace list outside an initializer", e.span)
        if isinstance(e, A.Bad):
            self.err(f"'{e.op}' is not Xd-C", e.span)
        self.err("unsupported expression", e.span)

    def call(self, e: A.Call):
        callee = e.callee
        if isinstance(callee, A.Var) and callee.name not in self.scope \
                and callee.name not in self.info.globals:
            f = self.info.functions.get(callee.name)
            if f is None:
                self.err(f"call of undeclared function '{callee.name}'", e.span)
            callee.ctype = PointerType(f.ftype)
            ft = f.ftype
            e.target = "extern" if callee.name in self.info.externs else "user"
        else:
            if isinstance(callee, A.Deref):
                t = self.expr(callee.expr)
                callee.ctype = t
            else:
                t = self.expr(callee)
            if not is_fptr(t):
                self.err("called object is not a function", e.span)
            ft = t.target
            e.target = "fptr"
        if len(e.args) != len(ft.params):
            self.err(f"call expects {len(ft.params)} argument(s), got {len(e.args)}", e.span)
        for a, pt in zip(e.args, ft.params):
            at = self.expr(a)
            if not assignable(pt, at, is_literal(a), is_null(a)):
                self.err(f"argument of type {at} does not match parameter type {pt}", a.span)
        return ft.ret

    def is_lvalue(self, e):
        if isinstance(e, A.Var):
            return (e.name in self.scope or e.name in self.info.globals)
        return isinstance(e, (A.Index, A.Index2, A.Member, A.Arrow, A.Deref))

    def lvalue_type(self, e):
        """Type of an lvalue without array decay."""
        if isinstance(e, A.Var):
            t = self.lookup(e.name, e.span)
            self.expr(e)
            return t
        return self.expr(e)

    # statements
    def assign_target(self, target):
        if not self.is_lvalue(target):
            self.err("assignment target is not an lvalue", target.span)
        t = self.lvalue_type(target)
        if isinstance(t, (ArrayType, StructType)) or not t.is_scalar():
            self.err(f"cannot assign to an object of type {t}", target.span)
        return t

    def stmt(self, s: A.Stmt):
        for item in A.flatten(s):
            self.soft(self._stmt, item)

    def cond(self, e):
        t = self.expr(e)
        if not t.is_scalar():
            self.err("condition must be scalar", e.span)

    def _stmt(self, s):
        if isinstance(s, (A.Null,)):
            return
        if isinstance(s, (A.PostInc, A.PostDec)):
            t = self.assign_target(s.target)
            if not (t.is_arith() or (isinstance(t, PointerType)
                                     and not isinstance(t.target, (VoidType, FuncType)))):
                self.err("increment of a non-arithmetic object", s.span)
            return
        if isinstance(s, A.Assign):
            t = self.assign_target(s.target)
            vt = self.expr(s.value)
            if not assignable(t, vt, is_literal(s.value), is_null(s.value)):
                self.err(f"cannot assign {vt} to {t}", s.span)
            return
        if isinstance(s, A.If):
            self.soft(self.cond, s.cond)
            self.stmt(s.then)
            self.stmt(s.other)
            return
        if isinstance(s, A.Switch):
            t = self.expr(s.expr)
            if not t.is_integer():
                self.err("switch expression must be an integer", s.expr.span)
            seen = set()
            for c in s.cases:
                if c.value is not None:
                    if c.value in seen:
                        self.soft(self.err, f"duplicate case label {c.value}", c.span)
                    seen.add(c.value)
            self.switches += 1
            for c in s.cases:
                self.stmt(c.body)
            self.switches -= 1
            return
        if isinstance(s, (A.While, A.Do)):
            self.soft(self.cond, s.cond)
            self.loops += 1
            self.stmt(s.body)
            self.loops -= 1
            return
        if isinstance(s, A.For):
            self.stmt(s.init)
            if s.cond is not None:
                self.soft(self.cond, s.cond)
            self.stmt(s.step)
            self.loops += 1
            self.stmt(s.body)
            self.loops -= 1
            return
        if isinstance(s, A.Continue):
            if not self.loops:
                self.err("continue outside a loop", s.span)
            return
        if isinstance(s, A.Break):
            if not (self.loops or self.switches):
                self.err("break outside a loop or switch", s.span)
            return
        if isinstance(s, A.Return):
            ret = self.func.ret
            if s.value is None:
                if not isinstance(ret, VoidType):
                    self.err(f"'{self.func.name}' must return a value", s.span)
                return
            if isinstance(ret, VoidType):
                self.err(f"void function '{self.func.name}' returns a value", s.span)
            vt = self.expr(s.value)
            if not assignable(ret, vt, is_literal(s.value), is_null(s.value)):
                self.err(f"cannot return {vt} from a function returning {ret}", s.span)
            return
        if isinstance(s, A.CallStmt):
            self.expr(s.call)
            return
        self.err(f"unsupported statement {type(s).__name__}", s.span)

    # declarations
    def declare(self, table, name, t, span):
        if name in table:
            self.err(f"redeclaration of '{name}'", span)
        table[name] = t

    def init(self, d: A.Declarator):
        t = d.ctype
        if d.init is None:
            return
        if isinstance(t, ArrayType):
            if not isinstance(d.init, A.InitList):
                self.err(f"array '{d.name}' needs a brace initializer", d.span)
            elems = self.flat_init(t, d.init, d.span)
            for e in elems:
                et = self.expr(e)
                if not assignable(t.elem, et, is_literal(e), is_null(e)):
                    self.err(f"initializer of type {et} for element type {t.elem}", e.span)
            return
        if isinstance(d.init, A.InitList):
            self.err(f"brace initializer for scalar '{d.name}'", d.span)
        vt = self.expr(d.init)
        if not assignable(t, vt, is_literal(d.init), is_null(d.init)):
            self.err(f"cannot initialise {t} with {vt}", d.span)

    def flat_init(self, t: ArrayType, il: A.InitList, span):
        if len(t.dims) == 1:
            if len(il.items) > t.dims[0]:
                self.err("too many initializers", span)
            if any(isinstance(i, A.InitList) for i in il.items):
                self.err("nested braces in a one-dimensional initializer", span)
            return list(il.items)
        n, m = t.dims
        if all(isinstance(i, A.InitList) for i in il.items) and il.items:
            if len(il.items) > n or any(len(r.items) > m for r in il.items):
                self.err("too many initializers", span)
            out = []
            for r in il.items:
                if any(isinstance(i, A.InitList) for i in r.items):
                    self.err("initializer nested too deeply", span)
                out.extend(r.items)
            return out
        if any(isinstance(i, A.InitList) for i in il.items):
            self.err("mixed braces in a two-dimensional initializer", span)
        if len(il.items) > n * m:
            self.err("too many initializers", span)
        return list(il.items)

    def no_calls(self, e, span):
        for n in A.walk(e):
            if isinstance(n, A.Call):
                self.err("function call in a global initializer", span)

    def var_decl(self, d: A.VarDecl, table, is_global):
        for item in d.items:
            def one(item=item):
                self.check_type(item.ctype, item.span)
                if item.init is not None and is_global:
                    self.no_calls(item.init, item.span)
                self.init(item)
                self.declare(table, item.name, item.ctype, item.span)
            self.soft(one)

    def struct_def(self, sd: A.StructDef):
        if sd.name in self.info.structs.structs:
            self.err(f"redefinition of struct '{sd.name}'", sd.span)
        names = set()
        for n, t in sd.fields:
            if n in names:
                self.err(f"duplicate field '{n}'", sd.span)
            names.add(n)
            if isinstance(t, ArrayType):
                self.err(f"array member '{n}' is not Xd-C", sd.span)
            if isinstance(t, StructType) and t.name == sd.name:
                self.err(f"struct '{sd.name}' contains itself", sd.span)
            self.check_type(t, sd.span, "member")
        self.info.structs.define(sd.name, sd.fields)

    def function_sig(self, f: A.FuncDef):
        if isinstance(f.ret, (ArrayType, StructType)):
            self.err(f"function '{f.name}' returns an aggregate", f.span)
        self.check_type(f.ret, f.span, "return")
        for p in f.params:
            if isinstance(p.ctype, StructType):
                self.err("struct parameters are not supported", p.span)
            self.check_type(p.ctype, p.span, "parameter")
        prev = self.info.functions.get(f.name)
        if prev is not None:
            if prev.ftype != f.ftype:
                self.err(f"conflicting declaration of '{f.name}'", f.span)
            if prev.body is not None and f.body is not None:
                self.err(f"redefinition of '{f.name}'", f.span)
            if prev.body is not None:
                return
        if f.name in self.info.globals:
            self.err(f"'{f.name}' already declared as a variable", f.span)
        self.info.functions[f.name] = f

    def function_body(self, f: A.FuncDef):
        self.func = f
        self.scope = {}
        for p in f.params:
            if not p.name:
                self.soft(self.err, "parameter name missing in a definition", p.span)
                continue
            self.soft(self.declare, self.scope, p.name, p.ctype, p.span)
        for d in f.locals:
            if isinstance(d, A.StructDef):
                self.soft(self.struct_def, d)
            elif isinstance(d, A.VarDecl):
                self.var_decl(d, self.scope, False)
        self.info.locals[f.name] = dict(self.scope)
        self.loops = self.switches = 0
        self.stmt(f.body)
        self.scope = {}
        self.func = None

    def run(self):
        prog = self.prog
        # a prototype without a definition names an extern function
        defined = {f.name for f in prog.functions if f.body is not None}
        self.info.externs = {f.name for f in prog.functions} - defined
        for f in prog.functions:
            self.soft(self.function_sig, f)
        for d in prog.decls:
            if isinstance(d, A.StructDef):
                self.soft(self.struct_def, d)
            elif isinstance(d, A.VarDecl):
                self.var_decl(d, self.info.globals, True)
        for name in self.info.globals:
            if name in self.info.functions:
                self.soft(self.err, f"'{name}' declared as both variable and function",
                          A.NOSPAN)
        for f in prog.functions:
            if f.body is not None:
                self.function_body(f)
        main = prog.main
        if main is not None and main.ret != INT:
            self.soft(self.err, "main must return int", main.span)
        return self.info


def typecheck(prog: A.Program):
    """Annotates prog in place. Returns (ProgramInfo, diagnostics)."""
    c = Checker(prog)
    info = c.run()
    return info, c.diags


def check_program(prog: A.Program) -> ProgramInfo:
    info, diags = typecheck(prog)
    if diags:
        raise TypeCheckError(diags[0].message, diags[0].span, diagnostics=diags)
    return info
