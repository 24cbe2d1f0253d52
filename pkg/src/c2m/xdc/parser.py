"""Recursive-descent parser for Xd-C.

The parser accepts a superset of Xd-C: constructs from the negative list
(goto, unions, compound assignment, ...) are parsed into ``Bad``/``BadStmt``
nodes or flagged declarations so that ``check_subset`` can report them with
the item they violate. Plain syntax errors raise ``ParseError``.
"""
from __future__ import annotations

from ..diagnostics import ParseError, Span
from ..types import (ArrayType, FloatType, FuncType, IntType, PointerType,
                     StructType, VoidType, CType)
from . import ast as A
from .lexer import Token, char_value, tokenize

STORAGE = {"typedef", "extern", "static", "auto", "register"}
QUALIFIERS = {"const", "volatile"}
TYPE_WORDS = {"void", "char", "short", "int", "long", "float", "double", "signed",
              "unsigned", "struct", "union"}

BINARY_PREC = {
    "||": 4, "&&": 5, "|": 6, "^": 7, "&": 8, "==": 9, "!=": 9,
    "<": 10, ">": 10, "<=": 10, ">=": 10, "<<": 11, ">>": 11,
    "+": 12, "-": 12, "*": 13, "/": 13, "%": 13,
}
ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="}


def _base_type(words: list[str], span) -> CType:
    spelling = " ".join(words)
    ws = sorted(words)
    signed = "unsigned" not in words
    core = [w for w in words if w not in ("signed", "unsigned")]
    if core == ["void"] and len(words) == 1:
        return VoidType()
    if core in (["float"],):
        return FloatType("float")
    if core == ["double"]:
        return FloatType("double")
    if sorted(core) == ["double", "long"]:
        return FloatType("long double")
    if not core or core == ["int"]:
        return IntType("int", signed, spelling)
    if core == ["char"]:
        return IntType("char", signed, spelling)
    if core in (["short"], ["short", "int"], ["int", "short"]):
        return IntType("short", signed, spelling)
    if core in (["long"], ["long", "int"], ["int", "long"]):
        return IntType("long", signed, spelling)
    raise ParseError(f"invalid type specifier '{' '.join(ws)}'", span)


class Parser:
    def __init__(self, tokens: list[Token], filename="<input>"):
        self.toks = tokens
        self.pos = 0
        self.filename = filename
        self.typedefs: set[str] = set()
        self.switch_depth = 0
        # (item, message, span) for constructs with no AST slot of their own
        self.violations: list[tuple] = []

    # token helpers
    def peek(self, k=0) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text, k=0):
        t = self.peek(k)
        return t.text == text and t.kind in ("punct", "kw")

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def accept(self, text):
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text, what=None):
        if self.at(text):
            return self.advance()
        t = self.peek()
        found = t.text or "end of input"
        raise ParseError(f"expected '{text}'{' ' + what if what else ''} but found '{found}'",
                         t.span)

    def ident(self):
        t = self.peek()
        if t.kind != "ident":
            raise ParseError(f"expected identifier but found '{t.text or 'end of input'}'",
                             t.span)
        return self.advance()

    def starts_type(self, k=0):
        t = self.peek(k)
        if t.kind == "kw" and (t.text in TYPE_WORDS or t.text in STORAGE
                               or t.text in QUALIFIERS):
            return True
        return t.kind == "ident" and t.text in self.typedefs

    # declarations
    def specifiers(self):
        """Returns (base type, storage, qualifiers, struct definition or None)."""
        start = self.peek()
        words: list[str] = []
        storage = None
        quals: list[str] = []
        base = None
        sdef = None
        while True:
            t = self.peek()
            if t.kind == "kw" and t.text in STORAGE:
                storage = storage or t.text
                self.advance()
            elif t.kind == "kw" and t.text in QUALIFIERS:
                quals.append(t.text)
                self.violations.append((9, f"type qualifier '{t.text}'", t.span))
                self.advance()
            elif t.kind == "kw" and t.text in ("struct", "union"):
                if t.text == "union":
                    self.violations.append((2, "union type", t.span))
                self.advance()
                name = self.ident().text
                base = StructType(name)
                if self.at("{"):
                    sdef = self.struct_body(name, t)
            elif t.kind == "kw" and t.text in TYPE_WORDS:
                words.append(t.text)
                self.advance()
            elif t.kind == "ident" and t.text in self.typedefs and base is None and not words:
                self.advance()
                base = IntType("int", True, t.text)
            else:
                break
        if base is None:
            if not words:
                raise ParseError("expected type specifier", start.span)
            base = _base_type(words, start.span)
        elif words:
            raise ParseError("conflicting type specifiers", start.span)
        return base, storage, tuple(quals), sdef

    def struct_body(self, name, kw_tok):
        self.expect("{")
        fields = []
        while not self.at("}"):
            ftok = self.peek()
            base, storage, quals, inner = self.specifiers()
            if storage:
                self.violations.append((8, f"storage class '{storage}' on a member", ftok.span))
            while True:
                dname, dtype, _ = self.declarator(base)
                fields.append((dname, dtype))
                if not self.accept(","):
                    break
            self.expect(";")
        self.expect("}")
        return A.StructDef(name, fields, union=kw_tok.text == "union", span=kw_tok.span)

    def const_int(self):
        e = self.expr_cond()
        v = fold_int(e)
        if v is None:
            raise ParseError("integer constant expression expected", e.span)
        return v

    def declarator(self, base):
        """Parses a declarator after the specifiers. Returns (name, type, dims
        still unknown flag)."""
        stars = 0
        while self.accept("*"):
            while self.peek().kind == "kw" and self.peek().text in QUALIFIERS:
                q = self.advance()
                self.violations.append((9, f"type qualifier '{q.text}'", q.span))
            stars += 1
        t = base
        for _ in range(stars):
            t = PointerType(t)
        if self.at("(") and self.at("*", 1):
            self.advance()
            self.advance()
            name = self.ident().text
            self.expect(")")
            self.expect("(")
            params, variadic = self.param_list()
            ft = FuncType(t, tuple(p.ctype for p in params))
            return name, PointerType(ft), False
        name_tok = self.ident()
        dims = []
        while self.accept("["):
            if self.accept("]"):
                dims.append(None)
                continue
            dims.append(self.const_int())
            self.expect("]")
        if dims:
            t = ArrayType(t, tuple(dims))
        return name_tok.text, t, any(d is None for d in dims)

    def param_list(self):
        params = []
        variadic = False
        if self.at("void") and self.at(")", 1):
            self.advance()
            self.advance()
            return params, False
        if self.accept(")"):
            return params, False
        while True:
            if self.at("..."):
                tok = self.advance()
                variadic = True
                params.append(A.Param("...", VoidType(), span=tok.span))
            else:
                tok = self.peek()
                base, storage, _, _ = self.specifiers()
                if storage:
                    self.violations.append((8, f"storage class '{storage}' on a parameter",
                                            tok.span))
                t = base
                while self.accept("*"):
                    t = PointerType(t)
                if self.at("(") and self.at("*", 1):
                    self.advance()
                    self.advance()
                    name = self.ident().text if self.peek().kind == "ident" else ""
                    self.expect(")")
                    self.expect("(")
                    ps, _ = self.param_list()
                    t = PointerType(FuncType(t, tuple(p.ctype for p in ps)))
                    params.append(A.Param(name, t, span=tok.span))
                else:
                    name = ""
                    if self.peek().kind == "ident":
                        name = self.advance().text
                    while self.accept("["):
                        if not self.at("]"):
                            self.const_int()
                        self.expect("]")
                        t = PointerType(t)
                    params.append(A.Param(name, t, span=tok.span))
            if not self.accept(","):
                break
        self.expect(")")
        if variadic:
            params = [p for p in params if p.name != "..."]
        return params, variadic

    def initializer(self):
        if self.at("{"):
            tok = self.advance()
            items = []
            while not self.at("}"):
                items.append(self.initializer())
                if not self.accept(","):
                    break
            self.expect("}")
            return A.InitList(items, span=tok.span)
        return self.expr_assign()

    def declaration(self, allow_functions):
        """Parses one declaration; returns a list of nodes (VarDecl, StructDef,
        FuncDef)."""
        start = self.peek()
        base, storage, quals, sdef = self.specifiers()
        out = []
        if sdef is not None:
            out.append(sdef)
        if self.accept(";"):
            if storage == "typedef":
                out.append(A.VarDecl(base, [], storage, quals, span=start.span))
            return out
        items = []
        while True:
            dtok = self.peek()
            name, t, unsized = self.declarator(base)
            if self.at("(") and allow_functions:
                self.advance()
                params, variadic = self.param_list()
                fn = A.FuncDef(t, name, params, variadic=variadic,
                               is_extern=False, storage=storage, span=dtok.span)
                if self.at("{"):
                    if items:
                        raise ParseError("function definition inside declaration list",
                                         dtok.span)
                    self.function_body(fn)
                    out.append(fn)
                    return out
                fn.is_extern = storage == "extern"
                out.append(fn)
                if self.accept(","):
                    continue
                self.expect(";")
                return out
            init = None
            if self.accept("="):
                init = self.initializer()
            if unsized:
                t = _fix_extent(t, init, dtok.span)
            if storage == "typedef":
                self.typedefs.add(name)
            items.append(A.Declarator(name, t, init, span=dtok.span))
            if not self.accept(","):
                break
        self.expect(";")
        out.append(A.VarDecl(base, items, storage, quals, span=start.span))
        return out

    def function_body(self, fn):
        self.expect("{")
        locals_ = []
        while self.starts_type():
            for d in self.declaration(allow_functions=False):
                locals_.append(d)
        stmts = self.stmt_list_until("}")
        self.expect("}")
        fn.locals = locals_
        fn.body = A.seq(stmts, fn.span)

    # statements
    def stmt_list_until(self, closer):
        stmts = []
        while not self.at(closer) and self.peek().kind != "eof":
            if self.starts_type():
                tok = self.peek()
                decls = self.declaration(allow_functions=False)
                stmts.append(A.BadStmt("declaration after statement", None, decls,
                                       span=tok.span))
                continue
            stmts.append(self.statement())
        return stmts

    def block(self):
        tok = self.expect("{")
        decls = []
        while self.starts_type():
            decls.extend(self.declaration(allow_functions=False))
        stmts = self.stmt_list_until("}")
        self.expect("}")
        body = A.seq(stmts, tok.span)
        if decls:
            return A.BadStmt("declaration in nested block", 10, [*decls, body], span=tok.span)
        return body

    def statement(self) -> A.Stmt:
        t = self.peek()
        sp = t.span
        if t.kind == "pp":
            self.advance()
            return A.BadStmt(f"preprocessor directive '{t.text}'", None, span=sp)
        if self.accept(";"):
            return A.Null(span=sp)
        if self.at("{"):
            return self.block()
        if t.kind == "ident" and self.at(":", 1):
            self.advance()
            self.advance()
            inner = self.statement()
            return A.BadStmt("label", 1, [inner], span=sp)
        if t.kind == "kw":
            kw = t.text
            if kw == "if":
                self.advance()
                self.expect("(")
                c = self.expr_full()
                self.expect(")")
                th = self.statement()
                el = self.statement() if self.accept("else") else A.Null(span=sp)
                return A.If(c, th, el, span=sp)
            if kw == "while":
                self.advance()
                self.expect("(")
                c = self.expr_full()
                self.expect(")")
                return A.While(c, self.statement(), span=sp)
            if kw == "do":
                self.advance()
                body = self.statement()
                self.expect("while")
                self.expect("(")
                c = self.expr_full()
                self.expect(")")
                self.expect(";")
                return A.Do(body, c, span=sp)
            if kw == "for":
                return self.for_stmt()
            if kw == "switch":
                return self.switch_stmt()
            if kw in ("case", "default"):
                self.advance()
                if kw == "case":
                    self.const_int()
                self.expect(":")
                return A.BadStmt("case label outside the switch body", 11, span=sp)
            if kw == "break":
                self.advance()
                self.expect(";")
                return A.Break(span=sp)
            if kw == "continue":
                self.advance()
                self.expect(";")
                return A.Continue(span=sp)
            if kw == "return":
                self.advance()
                if self.accept(";"):
                    return A.Return(None, span=sp)
                e = self.expr_full()
                self.expect(";")
                return A.Return(e, span=sp)
            if kw == "goto":
                self.advance()
                self.ident()
                self.expect(";")
                return A.BadStmt("goto", 1, span=sp)
        s = self.simple_stmt()
        self.expect(";")
        return s

    def simple_stmt(self):
        """Expression-like statement without the trailing ';' (also used by
        for-loop init and step)."""
        sp = self.peek().span
        e = self.expr_full()
        return self.classify(e, sp)

    def classify(self, e, sp):
        if isinstance(e, A.Bad):
            if e.op == "=":
                lhs, rhs = e.parts
                if isinstance(rhs, A.Bad) and rhs.op == "=":
                    return A.BadStmt("chained assignment", 7, [lhs, rhs], span=sp)
                if isinstance(rhs, A.InitList):
                    return A.BadStmt("brace assignment to struct", 6, [lhs, rhs], span=sp)
                return A.Assign(lhs, rhs, span=sp)
            if e.op in ASSIGN_OPS:
                return A.BadStmt(f"compound assignment '{e.op}'", 5, e.parts, span=sp)
            if e.op == "post++":
                return A.PostInc(e.parts[0], span=sp)
            if e.op == "post--":
                return A.PostDec(e.parts[0], span=sp)
            if e.op in ("pre++", "pre--"):
                return A.BadStmt(f"prefix '{e.op[3:]}'", 3, e.parts, span=sp)
            if e.op == ",":
                return A.BadStmt("comma expression", 4, e.parts, span=sp)
        if isinstance(e, A.Call):
            return A.CallStmt(e, span=sp)
        return A.BadStmt("expression statement without effect", None, [e], span=sp)

    def for_stmt(self):
        sp = self.advance().span
        self.expect("(")
        if self.starts_type():
            tok = self.peek()
            decls = self.declaration(allow_functions=False)
            init = A.BadStmt("declaration in for-loop header", 10, decls, span=tok.span)
        elif self.accept(";"):
            init = A.Null(span=sp)
        else:
            init = self.simple_stmt()
            self.expect(";")
        cond = None
        if not self.at(";"):
            cond = self.expr_full()
        self.expect(";")
        step = A.Null(span=sp) if self.at(")") else self.simple_stmt()
        self.expect(")")
        body = self.statement()
        return A.For(init, cond, step, body, span=sp)

    def switch_stmt(self):
        sp = self.advance().span
        self.expect("(")
        e = self.expr_full()
        self.expect(")")
        self.expect("{")
        cases: list[A.Case] = []
        labels: list[tuple] = []  # (value|None, span)
        body: list = []
        seen_default = False

        def close():
            if labels:
                # consecutive labels share the body of the last one
                for v, lsp in labels[:-1]:
                    cases.append(A.Case(v, A.Null(span=lsp), span=lsp))
                v, lsp = labels[-1]
                cases.append(A.Case(v, A.seq(body, lsp), span=lsp))

        self.switch_depth += 1
        while not self.at("}"):
            t = self.peek()
            if t.kind == "eof":
                raise ParseError("unterminated switch body", t.span)
            if self.at("case") or self.at("default"):
                if labels and body:
                    close()
                    labels, body = [], []
                self.advance()
                if t.text == "case":
                    if seen_default:
                        raise ParseError("default must be the last arm of a switch", t.span)
                    v = self.const_int()
                    labels.append((v, t.span))
                else:
                    if seen_default:
                        raise ParseError("duplicate default", t.span)
                    seen_default = True
                    labels.append((None, t.span))
                self.expect(":")
                continue
            if not labels:
                raise ParseError("statement before the first case label", t.span)
            if self.starts_type():
                decls = self.declaration(allow_functions=False)
                body.append(A.BadStmt("declaration in switch body", 10, decls, span=t.span))
                continue
            body.append(self.statement())
        self.switch_depth -= 1
        end = self.expect("}")
        if not seen_default:
            raise ParseError("switch without default arm", end.span)
        close()
        return A.Switch(e, cases, span=sp)

    # expressions
    def expr_full(self):
        e = self.expr_assign()
        while self.at(","):
            tok = self.advance()
            r = self.expr_assign()
            e = A.Bad(",", [e, r], span=tok.span)
        return e

    def expr_assign(self):
        lhs = self.expr_cond()
        t = self.peek()
        if t.kind == "punct" and t.text in ASSIGN_OPS:
            self.advance()
            rhs = self.initializer() if (t.text == "=" and self.at("{")) else self.expr_assign()
            return A.Bad(t.text, [lhs, rhs], span=lhs.span)
        return lhs

    def expr_cond(self):
        c = self.expr_binary(4)
        if self.at("?"):
            self.advance()
            a = self.expr_full()
            self.expect(":")
            b = self.expr_cond()
            return A.Cond(c, a, b, span=c.span)
        return c

    def expr_binary(self, min_prec):
        left = self.expr_unary()
        while True:
            t = self.peek()
            p = BINARY_PREC.get(t.text) if t.kind == "punct" else None
            if p is None or p < min_prec:
                return left
            self.advance()
            right = self.expr_binary(p + 1)
            left = A.Binop(t.text, left, right, span=left.span)

    def is_type_paren(self):
        return self.at("(") and self.starts_type(1)

    def expr_unary(self):
        t = self.peek()
        sp = t.span
        if t.kind == "punct":
            if t.text in ("+", "-", "~", "!"):
                self.advance()
                e = self.expr_unary()
                if t.text == "-" and isinstance(e, A.Const) and e.lit != "char" \
                        and not e.text.startswith("-"):
                    return A.Const(-e.value, e.lit, "-" + e.text, span=sp)
                return A.Unop(t.text, e, span=sp)
            if t.text == "*":
                self.advance()
                return A.Deref(self.expr_unary(), span=sp)
            if t.text == "&":
                self.advance()
                return A.AddrOf(self.expr_unary(), span=sp)
            if t.text in ("++", "--"):
                self.advance()
                return A.Bad("pre" + t.text, [self.expr_unary()], span=sp)
            if self.is_type_paren():
                self.advance()
                ctok = self.peek()
                base, storage, quals, _ = self.specifiers()
                if storage:
                    self.violations.append((8, f"storage class '{storage}' in a cast",
                                            ctok.span))
                ty = base
                while self.accept("*"):
                    ty = PointerType(ty)
                self.expect(")")
                e = self.expr_unary()
                return A.Cast(ty, e, span=sp)
        if t.kind == "kw" and t.text == "sizeof":
            self.advance()
            if self.is_type_paren():
                self.advance()
                self.specifiers()
                while self.accept("*"):
                    pass
                self.expect(")")
                return A.Bad("sizeof", [], span=sp)
            return A.Bad("sizeof", [self.expr_unary()], span=sp)
        return self.expr_postfix()

    def expr_postfix(self):
        e = self.expr_primary()
        while True:
            t = self.peek()
            if self.at("["):
                self.advance()
                idx = self.expr_full()
                self.expect("]")
                if isinstance(e, A.Var):
                    e = A.Index(e.name, idx, span=e.span)
                elif isinstance(e, A.Index):
                    e = A.Index2(e.name, e.index, idx, span=e.span)
                else:
                    raise ParseError("subscript only applies to a named array or pointer",
                                     t.span)
            elif self.at("."):
                self.advance()
                e = A.Member(e, self.ident().text, span=e.span)
            elif self.at("->"):
                self.advance()
                e = A.Arrow(e, self.ident().text, span=e.span)
            elif self.at("("):
                self.advance()
                args = []
                if not self.at(")"):
                    while True:
                        args.append(self.expr_assign())
                        if not self.accept(","):
                            break
                self.expect(")")
                e = A.Call(e, args, span=e.span)
            elif self.at("++") or self.at("--"):
                self.advance()
                e = A.Bad("post" + t.text, [e], span=e.span)
            else:
                return e

    def expr_primary(self):
        t = self.peek()
        sp = t.span
        if t.kind == "ident":
            self.advance()
            return A.Var(t.text, span=sp)
        if t.kind == "int":
            self.advance()
            return parse_int_literal(t)
        if t.kind == "float":
            self.advance()
            lit = "float" if t.text[-1] in "fF" else "double"
            return A.Const(float(t.text.rstrip("fFlL")), lit, t.text, span=sp)
        if t.kind == "char":
            self.advance()
            try:
                v = char_value(t.text)
            except ValueError:
                raise ParseError(f"bad character constant {t.text}", sp) from None
            return A.Const(v, "char", t.text, span=sp)
        if t.kind == "string":
            self.advance()
            return A.Bad("string", [t.text], span=sp)
        if self.accept("("):
            e = self.expr_full()
            self.expect(")")
            return e
        raise ParseError(f"expected expression but found '{t.text or 'end of input'}'", sp)

    # program
    def program(self):
        decls, functions = [], []
        while self.peek().kind != "eof":
            t = self.peek()
            if t.kind == "pp":
                self.advance()
                raise ParseError(
                    f"preprocessor directive '{t.text}' in input; run the C preprocessor first",
                    t.span)
            if self.accept(";"):
                continue
            for node in self.declaration(allow_functions=True):
                (functions if isinstance(node, A.FuncDef) else decls).append(node)
        prog = A.Program(decls, functions, filename=self.filename)
        prog.violations = list(self.violations)
        if prog.main is None:
            raise ParseError("no main function", self.peek().span)
        return prog


def parse_int_literal(t: Token) -> A.Const:
    text = t.text
    body = text.rstrip("uUlL")
    suffix = text[len(body):].lower()
    v = int(body, 16) if body[:2].lower() == "0x" else (
        int(body, 8) if len(body) > 1 and body[0] == "0" else int(body))
    if "u" in suffix:
        lit = "uint"
    elif "l" in suffix:
        lit = "long"
    else:
        lit = "int" if v < 2 ** 31 else "uint"
    if v >= 2 ** 32:
        raise ParseError(f"integer constant {text} too large", t.span)
    return A.Const(v, lit, text, span=t.span)


def fold_int(e):
    """Integer value of a constant expression, or None."""
    if isinstance(e, A.Const) and isinstance(e.value, int):
        return e.value
    if isinstance(e, A.Unop):
        v = fold_int(e.expr)
        if v is None:
            return None
        return {"-": -v, "+": v, "~": ~v, "!": int(not v)}[e.op]
    if isinstance(e, A.Binop):
        a, b = fold_int(e.left), fold_int(e.right)
        if a is None or b is None:
            return None
        try:
            return {"+": a + b, "-": a - b, "*": a * b,
                    "/": int(a / b) if b else None, "%": a - b * int(a / b) if b else None,
                    "<<": a << b, ">>": a >> b, "&": a & b, "|": a | b, "^": a ^ b}.get(e.op)
        except (ValueError, ZeroDivisionError):
            return None
    return None


def _fix_extent(t, init, span):
    """Fills an unsized leading array extent from the initializer count."""
    if not isinstance(t, ArrayType) or not isinstance(init, A.InitList):
        raise ParseError("array of unknown size needs an initializer list", span)
    dims = list(t.dims)
    if any(d is None for d in dims[1:]):
        raise ParseError("only the first array extent may be omitted", span)
    if len(dims) == 2 and not all(isinstance(i, A.InitList) for i in init.items):
        dims[0] = -(-len(init.items) // dims[1])
    else:
        dims[0] = len(init.items)
    return ArrayType(t.elem, tuple(dims))


def parse_program(tokens_or_source, filename="<input>") -> A.Program:
    toks = tokens_or_source
    if isinstance(tokens_or_source, str):
        toks = tokenize(tokens_or_source)
    return Parser(toks, filename).program()


def parse_expr(source: str) -> A.Expr:
    p = Parser(tokenize(source))
    e = p.expr_full()
    if p.peek().kind != "eof":
        raise ParseError(f"unexpected '{p.peek().text}'", p.peek().span)
    return e


def parse_stmt(source: str) -> A.Stmt:
    p = Parser(tokenize(source))
    stmts = p.stmt_list_until("")
    if p.peek().kind != "eof":
        raise ParseError(f"unexpected '{p.peek().text}'", p.peek().span)
    return A.seq(stmts)
