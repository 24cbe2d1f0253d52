"""Parser for the emitted MSVL dialect.

Program shape is ``(decl and skip;)* (function ...;)* ms``. A declaration
item before the first function belongs to the program; when a program has no
functions, leading declaration items of the body cannot be told apart from
program declarations and are read as the latter.
"""
from __future__ import annotations

import re

from ..diagnostics import ParseError, Span
from ..types import ArrayType, FuncType, PointerType, StructType
from ..xdc.lexer import char_value
from ..xdc.parser import _base_type
from . import ast as M

KEYWORDS = frozenset("""empty skip and or next if then else while function ext struct
                        true false prev more always""".split())
TYPE_WORDS = frozenset("void char short int long float double signed unsigned".split())

_TOKEN = re.compile(r"""
    (?P<ws>\s+|//[^\n]*|/\*.*?\*/)
  | (?P<float>(\d+\.\d*|\.\d+)([eE][+-]?\d+)?[fFlL]?|\d+[eE][+-]?\d+[fFlL]?)
  | (?P<int>(0[xX][0-9a-fA-F]+|\d+)[uUlL]*)
  | (?P<char>'(\\.|[^\\'\n])+')
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct><==|:=|<=|>=|!=|<<|>>|->|[-+*/%&|^~!<>=()\[\]{},;.])
""", re.VERBOSE | re.DOTALL)

BIN_PREC = {"or": 4, "and": 5, "|": 6, "^": 7, "&": 8, "=": 9, "!=": 9,
            "<": 10, ">": 10, "<=": 10, ">=": 10, "<<": 11, ">>": 11,
            "+": 12, "-": 12, "*": 13, "/": 13, "%": 13}


class Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    @property
    def span(self):
        return Span(self.line, self.col)

    def __repr__(self):
        return f"[{self.kind} {self.text}]"


def tokenize(text: str) -> list[Tok]:
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"illegal character {text[pos]!r}", Span(line, col))
        kind = m.lastgroup
        s = m.group(0)
        if kind != "ws":
            if kind == "ident" and (s in KEYWORDS or s in TYPE_WORDS):
                kind = "kw"
            toks.append(Tok(kind, s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        pos = m.end()
    toks.append(Tok("eof", "", line, col))
    return toks


class MParser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self, k=0):
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text, k=0):
        t = self.peek(k)
        return t.text == text and t.kind in ("punct", "kw")

    def advance(self):
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def accept(self, text):
        return self.advance() if self.at(text) else None

    def expect(self, text):
        if self.at(text):
            return self.advance()
        t = self.peek()
        raise ParseError(f"expected '{text}' but found '{t.text or 'end of input'}'", t.span)

    def ident(self):
        t = self.peek()
        if t.kind != "ident":
            raise ParseError(f"expected identifier but found '{t.text or 'end of input'}'",
                             t.span)
        return self.advance().text

    # types
    def starts_type(self, k=0):
        t = self.peek(k)
        if t.kind == "kw" and t.text in TYPE_WORDS:
            return True
        # `struct S x` declares; `struct S {` defines
        return self.at("struct", k) and self.peek(k + 1).kind == "ident"

    def base_type(self):
        start = self.peek()
        if self.accept("struct"):
            return StructType(self.ident())
        words = []
        while self.peek().kind == "kw" and self.peek().text in TYPE_WORDS:
            words.append(self.advance().text)
        return _base_type(words, start.span)

    def type_name(self):
        t = self.base_type()
        while self.accept("*"):
            t = PointerType(t)
        return t

    def declarator(self, base):
        t = base
        while self.accept("*"):
            t = PointerType(t)
        if self.at("(") and self.at("*", 1):
            self.advance()
            self.advance()
            name = self.ident()
            self.expect(")")
            self.expect("(")
            ps = self.params()
            return name, PointerType(FuncType(t, tuple(p.ctype for p in ps)))
        name = self.ident()
        dims = []
        while self.accept("["):
            dims.append(int(self.advance().text.rstrip("uUlL"), 0))
            self.expect("]")
        if dims:
            t = ArrayType(t, tuple(dims))
        return name, t

    def params(self):
        ps = []
        if self.accept(")"):
            return ps
        if self.at("void") and self.at(")", 1):
            self.advance()
            self.advance()
            return ps
        while True:
            base = self.base_type()
            t = base
            while self.accept("*"):
                t = PointerType(t)
            if self.at("(") and self.at("*", 1):
                self.advance()
                self.advance()
                name = self.ident() if self.peek().kind == "ident" else ""
                self.expect(")")
                self.expect("(")
                inner = self.params()
                t = PointerType(FuncType(t, tuple(p.ctype for p in inner)))
            else:
                name = self.ident() if self.peek().kind == "ident" else ""
            ps.append(M.MParam(name, t))
            if not self.accept(","):
                break
        self.expect(")")
        return ps

    def decl(self):
        base = self.base_type()
        items = []
        while True:
            name, t = self.declarator(base)
            init = None
            if self.accept("<=="):
                init = self.init_value()
            items.append(M.MDeclItem(name, t, init))
            if not self.accept(","):
                break
        return M.MDecl(base, tuple(items))

    def init_value(self):
        if self.accept("{"):
            items = []
            while not self.at("}"):
                items.append(self.init_value())
                if not self.accept(","):
                    break
            self.expect("}")
            return M.MInitList(tuple(items))
        return self.rvalue()

    def struct_def(self):
        self.expect("struct")
        name = self.ident()
        self.expect("{")
        fields = []
        while True:
            base = self.base_type()
            fname, t = self.declarator(base)
            fields.append((fname, t))
            if not self.accept("and"):
                break
        self.expect("}")
        return M.MStruct(name, tuple(fields))

    # statements
    def stmt(self):
        parts = [self.conj()]
        while self.accept(";"):
            parts.append(self.conj())
        return M.chop(parts)

    def conj(self):
        parts = [self.unit()]
        while self.accept("and"):
            parts.append(self.unit())
        acc = parts[-1]
        for p in reversed(parts[:-1]):
            acc = M.MAnd(p, acc)
        return acc

    def braced(self):
        self.expect("{")
        s = self.stmt()
        self.expect("}")
        return s

    def unit(self):
        t = self.peek()
        if self.accept("empty"):
            return M.MEmpty()
        if self.accept("skip"):
            return M.MSkip()
        if self.accept("next"):
            return M.MNext(self.braced() if self.at("{") else self.unit())
        if self.accept("always"):
            return M.MAlways(self.braced() if self.at("{") else self.unit())
        if self.accept("more"):
            return M.MMore()
        if self.accept("true"):
            return M.MTrue()
        if self.accept("false"):
            return M.MFalse()
        if self.at("{"):
            return self.braced()
        if self.accept("if"):
            self.expect("(")
            c = self.expr(0)
            self.expect(")")
            self.expect("then")
            a = self.braced()
            self.expect("else")
            b = self.braced()
            return M.MIf(c, a, b)
        if self.accept("while"):
            self.expect("(")
            c = self.expr(0)
            self.expect(")")
            return M.MWhile(c, self.braced())
        if self.starts_type():
            return self.decl()
        if self.accept("ext"):
            callee, args, rval = self.call_tail()
            return M.MExtCall(callee, args, rval)
        if t.kind == "ident" and self.at("(", 1):
            callee, args, rval = self.call_tail()
            return M.MCall(callee, args, rval)
        target = self.unary()
        if self.at("("):
            _, args, rval = self.call_tail(target)
            return M.MCall(target, args, rval)
        if self.accept(":="):
            return M.MUnitAssign(target, self.rvalue())
        if self.accept("<=="):
            return M.MAssign(target, self.rvalue())
        raise ParseError(f"expected a statement near '{t.text or 'end of input'}'", t.span)

    def call_tail(self, callee=None):
        if callee is not None:
            pass
        elif self.at("("):
            self.advance()
            callee = self.expr(0)
            self.expect(")")
        else:
            callee = M.MVar(self.ident())
        self.expect("(")
        args = []
        rval = False
        if not self.at(")"):
            while True:
                if self.peek().text == "RVal" and (self.at(")", 1)):
                    self.advance()
                    rval = True
                    break
                args.append(self.expr(0))
                if not self.accept(","):
                    break
        self.expect(")")
        return callee, tuple(args), rval

    # expressions
    def rvalue(self):
        """Right-value in statement position: no top-level and/or."""
        return self.expr(6)

    def expr(self, min_prec):
        left = self.unary(min_prec)
        while True:
            t = self.peek()
            op = t.text if t.kind in ("punct", "kw") else None
            p = BIN_PREC.get(op)
            if p is None or p < min_prec:
                return left
            self.advance()
            right = self.expr(p + 1)
            left = M.MBinop(op, left, right)

    def unary(self, min_prec=0):
        t = self.peek()
        if t.kind == "punct" and t.text in ("+", "-", "~", "!"):
            self.advance()
            literal = self.peek().kind in ("int", "float", "char")
            e = self.unary()
            if t.text == "-" and literal and isinstance(e, M.MConst) and e.lit != "char" \
                    and not e.text.startswith("-"):
                return M.MConst(-e.value, "-" + e.text, e.lit)
            return M.MUnop(t.text, e)
        if self.at("*"):
            self.advance()
            return M.MDeref(self.unary())
        if self.at("&"):
            self.advance()
            return M.MAddrOf(self.unary())
        if self.at("(") and self.starts_type(1):
            self.advance()
            ty = self.type_name()
            self.expect(")")
            return M.MCast(ty, self.unary())
        if self.accept("if"):
            self.expect("(")
            c = self.expr(0)
            self.expect(")")
            self.expect("then")
            a = self.expr(6)
            self.expect("else")
            b = self.expr(6)
            return M.MIfExpr(c, a, b)
        if self.accept("ext"):
            callee, args, rval = self.call_tail()
            return M.MExtCallExpr(callee, args, rval)
        return self.postfix()

    def postfix(self):
        e = self.primary()
        while True:
            if self.accept("["):
                idx = self.expr(0)
                self.expect("]")
                if isinstance(e, M.MVar):
                    e = M.MIndex(e.name, idx)
                elif isinstance(e, M.MIndex):
                    e = M.MIndex2(e.name, e.index, idx)
                else:
                    raise ParseError("subscript of a non-array", self.peek().span)
            elif self.accept("."):
                e = M.MMember(e, self.ident())
            elif self.accept("->"):
                e = M.MArrow(e, self.ident())
            else:
                return e

    def primary(self):
        t = self.peek()
        if t.kind == "ident":
            self.advance()
            return M.MVar(t.text)
        if t.kind == "int":
            self.advance()
            body = t.text.rstrip("uUlL")
            suffix = t.text[len(body):].lower()
            v = int(body, 16) if body[:2].lower() == "0x" else (
                int(body, 8) if len(body) > 1 and body[0] == "0" else int(body))
            lit = "uint" if "u" in suffix or v >= 2 ** 31 else ("long" if "l" in suffix
                                                                else "int")
            return M.MConst(v, t.text, lit)
        if t.kind == "float":
            self.advance()
            lit = "float" if t.text[-1] in "fF" else "double"
            return M.MConst(float(t.text.rstrip("fFlL")), t.text, lit)
        if t.kind == "char":
            self.advance()
            return M.MConst(char_value(t.text), t.text, "char")
        if self.accept("true"):
            return M.MBool(True)
        if self.accept("false"):
            return M.MBool(False)
        if self.accept("prev"):
            self.expect("(")
            inner = self.expr(0)
            self.expect(")")
            if isinstance(inner, M.MPrev):
                return M.MPrev(inner.depth + 1, inner.expr)
            return M.MPrev(1, inner)
        if self.accept("("):
            e = self.expr(0)
            self.expect(")")
            return e
        raise ParseError(f"expected expression but found '{t.text or 'end of input'}'",
                         t.span)

    # program
    def function(self):
        self.expect("function")
        name = self.ident()
        self.expect("(")
        ps = self.params()
        rval = None
        if ps and ps[-1].name == "RVal":
            rval = ps[-1].ctype
            ps = ps[:-1]
        self.expect("{")
        body = self.stmt()
        self.expect("}")
        return M.MFunction(name, tuple(ps), rval, body)

    def program(self):
        decls = []
        functions = []
        while True:
            if self.at("struct") and self.peek(1).kind == "ident" and self.at("{", 2):
                decls.append(self.struct_def())
                self.expect(";")
                continue
            if self.starts_type() and not functions:
                save = self.pos
                d = self.conj()
                if isinstance(d, M.MAnd) and isinstance(d.left, M.MDecl) \
                        and isinstance(d.right, M.MSkip) and self.at(";"):
                    self.advance()
                    decls.append(d)
                    continue
                self.pos = save
            if self.at("function"):
                functions.append(self.function())
                self.expect(";")
                continue
            break
        body = self.stmt()
        if self.peek().kind != "eof":
            t = self.peek()
            raise ParseError(f"unexpected '{t.text}'", t.span)
        return M.MProgram(tuple(decls), tuple(functions), body)


def parse_msvl(text: str) -> M.MProgram:
    return MParser(text).program()


def parse_mstmt(text: str) -> M.MStmt:
    p = MParser(text)
    s = p.stmt()
    if p.peek().kind != "eof":
        raise ParseError(f"unexpected '{p.peek().text}'", p.peek().span)
    return s


def parse_mexpr(text: str) -> M.MExpr:
    p = MParser(text)
    e = p.expr(0)
    if p.peek().kind != "eof":
        raise ParseError(f"unexpected '{p.peek().text}'", p.peek().span)
    return e

