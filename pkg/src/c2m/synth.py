"""Random Xd-C program generators.

Two generators live here. ``expr_program`` builds a store of typed globals
with random contents and a list of probe assignments ``rK = e;`` whose right
sides are pure expressions. ``stmt_program`` builds a terminating program of
roughly n statements for the size, ratio and framing experiments.

Both produce source text and go through the normal frontend, so anything
they emit is plain Xd-C.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

# expression generator

INT_TYPES = {"int": "int", "char": "char", "uchar": "unsigned char", "short": "short",
             "uint": "unsigned int"}
FLOAT_TYPES = {"double": "double", "float": "float"}
NARROW = ("char", "uchar", "short")
SCALARS = {**INT_TYPES, **FLOAT_TYPES}

# variables per type: name -> C spelling of the declaration
_VARS = {
    "int": ["a0", "a1", "a2"],
    "char": ["c0", "c1"],
    "uchar": ["u0", "u1"],
    "short": ["s0", "s1"],
    "uint": ["w0", "w1"],
    "double": ["d0", "d1"],
    "float": ["f0", "f1"],
}
_RANGES = {"int": (-2**31, 2**31 - 1), "char": (-128, 127), "uchar": (0, 255),
           "short": (-32768, 32767), "uint": (0, 2**32 - 1)}


def _int_lit(rng, t):
    lo, hi = _RANGES[t]
    pick = rng.random()
    if pick < 0.6:
        return rng.randint(max(lo, -20), min(hi, 20))
    if pick < 0.8:
        return rng.choice([lo, hi, 0, 1])
    return rng.randint(lo, hi)


def _fmt_int(n, t):
    if t == "uint":
        return f"{n}u"
    if n < 0:
        return f"({n})"
    return str(n)


def _fmt_float(x, t):
    s = repr(float(x))
    if "e" in s or "inf" in s or "nan" in s:
        s = f"{x:.6f}"
    s = s + ("f" if t == "float" else "")
    return f"({s})" if x < 0 else s


@dataclass
class ExprGen:
    """Typed random pure expressions over the probe store."""
    rng: random.Random
    max_depth: int = 4

    def var(self, t):
        return self.rng.choice(_VARS[t])

    def lit(self, t):
        if t in FLOAT_TYPES:
            return _fmt_float(round(self.rng.uniform(-50, 50), 3), t)
        return _fmt_int(_int_lit(self.rng, t), t)

    def index(self):
        return f"(({self.gen('int', 2)}) & 3)"

    def leaf(self, t):
        r = self.rng.random()
        if t == "int":
            opts = [lambda: self.var("int"), lambda: self.lit("int"),
                    lambda: f"arr[{self.index()}]", lambda: "q.x", lambda: "qp->y",
                    lambda: "*p", lambda: "p[1]", lambda: "m[1][2]"]
            return self.rng.choice(opts)()
        if r < 0.6:
            return self.var(t)
        return self.lit(t)

    def gen(self, t, depth=None):
        depth = self.max_depth if depth is None else depth
        if t == "ptr":
            return self.ptr(depth)
        if depth <= 0 or self.rng.random() < 0.25:
            return self.leaf(t)
        e = self._node(t, depth - 1)
        if t in NARROW and not e.startswith(f"(({SCALARS[t]})"):
            # literal-only subterms are typed int; pin the width back down
            e = f"(({SCALARS[t]}) {e})"
        return e

    def _node(self, t, d):
        rng = self.rng
        kinds = ["arith", "arith", "unary", "cond", "cast", "cmp"]
        if t in INT_TYPES:
            kinds += ["bitwise", "shift", "logic"]
        if t == "int":
            kinds += ["pdiff", "pcmp"]
        k = rng.choice(kinds)
        if k == "arith":
            op = rng.choice(["+", "-", "*", "/"] + (["%"] if t in INT_TYPES else []))
            return f"({self.gen(t, d)} {op} {self.gen(t, d)})"
        if k == "bitwise":
            return f"({self.gen(t, d)} {rng.choice(['&', '|', '^'])} {self.gen(t, d)})"
        if k == "shift":
            return f"({self.gen(t, d)} {rng.choice(['<<', '>>'])} {rng.randint(0, 7)})"
        if k == "unary":
            ops = ["-", "+"] + (["~"] if t in INT_TYPES else [])
            return f"{rng.choice(ops)}({self.gen(t, d)})"
        if k == "cond":
            return f"({self.gen('int', d)} ? {self.gen(t, d)} : {self.gen(t, d)})"
        if k == "cast":
            src = rng.choice(list(SCALARS))
            if (src in FLOAT_TYPES) != (t in FLOAT_TYPES):
                # float to int keeps to small magnitudes; int to float is exact
                if src in FLOAT_TYPES:
                    return f"(({SCALARS[t]}) ({src[0]}0 / 4.0{'f' if src == 'float' else ''}))"
            return f"(({SCALARS[t]}) {self.gen(src, d)})"
        # the remaining kinds yield int
        if k == "cmp":
            u = rng.choice(list(SCALARS))
            op = rng.choice(["<", "<=", ">", ">=", "==", "!="])
            e = f"({self.gen(u, d)} {op} {self.gen(u, d)})"
        elif k == "logic":
            e = f"({self.gen('int', d)} {rng.choice(['&&', '||'])} {self.gen('int', d)})"
            if rng.random() < 0.3:
                e = f"!{e}"
        elif k == "pdiff":
            e = f"({self.ptr(d, same_block=True)} - {self.ptr(d, same_block=True)})"
        else:
            e = f"({self.ptr(d)} {rng.choice(['==', '!='])} {self.ptr(d)})"
        return e if t == "int" else f"(({SCALARS[t]}) {e})"

    def ptr(self, depth, same_block=False):
        """An int pointer; with same_block, one into arr only."""
        rng = self.rng
        opts = ["p", "&arr[1]", "arr"] + ([] if same_block else ["&a0", "&q.y"])
        if depth > 0:
            opts += [f"(p + {rng.randint(0, 2)})", f"(arr + (({self.gen('int', depth - 1)}) & 3))",
                     f"({self.gen('int', depth - 1)} ? p : &arr[0])"]
            if same_block:
                opts = opts[:-1]
        return rng.choice(opts)


def expr_program(rng: random.Random, n: int = 100, depth: int = 4) -> str:
    """Random store plus n probe assignments ``rK = e;``."""
    lines = ["struct pt { int x; int y; };"]
    for t, names in _VARS.items():
        for v in names:
            if t in FLOAT_TYPES:
                init = _fmt_float(round(rng.uniform(-100, 100), 2), t)
            else:
                init = _fmt_int(_int_lit(rng, t), t)
            lines.append(f"{SCALARS[t]} {v} = {init};")
    vals = ", ".join(str(rng.randint(-9, 9)) for _ in range(4))
    lines.append(f"int arr[4] = {{{vals}}};")
    rows = ", ".join("{" + ", ".join(str(rng.randint(-9, 9)) for _ in range(3)) + "}"
                     for _ in range(2))
    lines.append(f"int m[2][3] = {{{rows}}};")
    lines.append(f"int *p = &arr[{rng.randint(0, 2)}];")
    lines.append("struct pt q;")
    lines.append("struct pt *qp = &q;")
    gen = ExprGen(rng, depth)
    probes = []
    for k in range(n):
        t = rng.choice(list(SCALARS) + ["int", "int", "ptr"])
        spell = "int *" if t == "ptr" else SCALARS[t] + " "
        lines.append(f"{spell}r{k};")
        probes.append(f"    r{k} = {gen.gen(t)};")
    lines.append("")
    lines.append("int main(void)")
    lines.append("{")
    lines.append(f"    q.x = {rng.randint(-50, 50)};")
    lines.append(f"    q.y = {rng.randint(-50, 50)};")
    lines.extend(probes)
    lines.append("    return 0;")
    lines.append("}")
    return "\n".join(lines) + "\n"


# statement generator

@dataclass
class _Ctx:
    depth: int = 0
    loop: bool = False     # inside a loop that tolerates break
    for_loop: bool = False  # continue is safe only in for loops
    counters: list = field(default_factory=list)
    switch: bool = False


class StmtGen:
    """Terminating programs: loops run a small fixed number of times over
    counters nothing else writes, and helpers are non-recursive."""

    LOCALS = ["x0", "x1", "x2", "x3"]
    GLOBALS = ["g0", "g1", "g2"]
    COUNTERS = ["i0", "i1", "i2"]

    def __init__(self, rng: random.Random, max_depth=3, helpers=3):
        self.rng = rng
        self.max_depth = max_depth
        self.helpers = helpers
        self.budget = 0

    # expressions over ints
    def operand(self, names=None):
        rng = self.rng
        names = names or self.LOCALS + self.GLOBALS
        r = rng.random()
        if r < 0.45:
            return rng.choice(names)
        if r < 0.75:
            return str(rng.randint(0, 9))
        return f"a[{rng.choice(names)} & 7]"

    def expr(self, depth=2, names=None):
        rng = self.rng
        if depth == 0 or rng.random() < 0.35:
            return self.operand(names)
        a, b = self.expr(depth - 1, names), self.expr(depth - 1, names)
        op = rng.choice(["+", "-", "*", "&", "|", "^", "<", "==", "/", "%"])
        if op in ("/", "%"):
            return f"{a} {op} (1 + (({b}) & 3))"
        if op in ("<", "=="):
            return f"({a} {op} {b})"
        return f"({a} {op} {b})" if depth > 1 else f"{a} {op} {b}"

    # statements
    def block(self, n, ctx, ind):
        out = []
        while n > 0:
            k, text = self.stmt(n, ctx, ind)
            out.append(text)
            n -= k
        return out

    def stmt(self, n, ctx, ind):
        """(statements used, source lines)."""
        rng = self.rng
        pad = "    " * ind
        compound = n >= 3 and ctx.depth < self.max_depth
        kinds = ["assign"] * 5 + ["store", "inc", "print", "call"]
        if compound:
            kinds += ["if", "if", "for", "while", "do"] + ([] if ctx.switch else ["switch"])
        if ctx.loop:
            kinds.append("break")
        if ctx.for_loop:
            kinds.append("continue")
        k = rng.choice(kinds)
        if k == "assign":
            return 1, f"{pad}{rng.choice(self.LOCALS + self.GLOBALS)} = {self.expr()};"
        if k == "store":
            return 1, f"{pad}a[{self.operand()} & 7] = {self.expr(1)};"
        if k == "inc":
            return 1, f"{pad}{rng.choice(self.LOCALS)}{rng.choice(['++', '--'])};"
        if k == "print":
            return 1, f"{pad}print_int({self.expr(1)});"
        if k == "call":
            h = rng.randrange(self.helpers)
            if rng.random() < 0.5:
                return 1, f"{pad}{rng.choice(self.LOCALS)} = h{h}({self.expr(1)}, {self.expr(1)});"
            return 1, f"{pad}bump({self.expr(1)});"
        if k in ("break", "continue"):
            return 1, f"{pad}if ({self.expr(1)} == {rng.randint(0, 3)}) {k};"
        sub = _Ctx(ctx.depth + 1, ctx.loop, ctx.for_loop, ctx.counters, ctx.switch)
        inner = rng.randint(1, max(1, min(n - 1, 6)))
        if k == "if":
            body = self.block(inner, sub, ind + 1)
            if len(body) == 1 and "\n" not in body[0] and rng.random() < 0.5 \
                    and not body[0].lstrip().startswith("if"):
                return 1 + inner, f"{pad}if {self._cond()}\n{body[0]}"
            lines = [f"{pad}if {self._cond()} {{", *body]
            if rng.random() < 0.5 and n - inner >= 2:
                other = rng.randint(1, max(1, min(n - inner - 1, 4)))
                lines += [f"{pad}}} else {{", *self.block(other, sub, ind + 1)]
                inner += other
            lines.append(f"{pad}}}")
            return 1 + inner, "\n".join(lines)
        free = [c for c in self.COUNTERS if c not in ctx.counters]
        if k in ("for", "while", "do") and not free:
            return 1, f"{pad}{rng.choice(self.LOCALS)} = {self.expr()};"
        if k == "switch":
            arm = _Ctx(ctx.depth + 1, False, False, ctx.counters, True)
            lines = [f"{pad}switch ({self.expr(1)} & 3) {{"]
            used = 0
            for c in range(rng.randint(1, 3)):
                lines.append(f"{pad}case {c}:")
                m = max(1, (inner - used) // 2) if c < 2 else 1
                lines += self.block(m, arm, ind + 1)
                used += m
                if rng.random() < 0.7:
                    lines.append(f"{pad}    break;")
            lines.append(f"{pad}default:")
            lines += self.block(1, arm, ind + 1)
            lines.append(f"{pad}}}")
            return 1 + used + 1, "\n".join(lines)
        c = free[0]
        bound = rng.randint(0, 3)
        counters = ctx.counters + [c]
        if k == "for":
            body = self.block(inner, _Ctx(ctx.depth + 1, True, True, counters, ctx.switch), ind + 1)
            return 1 + inner, "\n".join([f"{pad}for ({c} = 0; {c} < {bound}; {c}++) {{",
                                          *body, f"{pad}}}"])
        body = self.block(inner, _Ctx(ctx.depth + 1, True, False, counters, ctx.switch), ind + 1)
        step = f"{pad}    {c}++;"
        if k == "while":
            return 2 + inner, "\n".join([f"{pad}{c} = 0;", f"{pad}while ({c} < {bound}) {{",
                                          *body, step, f"{pad}}}"])
        return 2 + inner, "\n".join([f"{pad}{c} = 0;", f"{pad}do {{", *body, step,
                                      f"{pad}}} while ({c} < {bound});"])

    def _cond(self):
        return f"({self.expr(1)} {self.rng.choice(['<', '>', '==', '!='])} {self.rng.randint(0, 9)})"

    def helper(self, k):
        names = self.GLOBALS + ["u", "v"]
        a, b = self.expr(2, names), self.expr(1, names)
        return "\n".join([
            f"int h{k}(int u, int v)",
            "{",
            "    int t;",
            f"    t = {a};",
            f"    if (t > {self.rng.randint(0, 20)}) {{",
            f"        return t - {b};",
            "    }",
            "    return t + v;",
            "}",
        ])

    def program(self, n: int) -> str:
        rng = self.rng
        parts = ["extern void print_int(int v);", ""]
        parts += [f"int {g} = {rng.randint(0, 9)};" for g in self.GLOBALS]
        parts += ["int a[8] = {" + ", ".join(str(rng.randint(0, 9)) for _ in range(8)) + "};", ""]
        parts += ["void bump(int d)", "{", "    g0 = g0 + d;", "}", ""]
        for k in range(self.helpers):
            parts += [self.helper(k), ""]
        parts += ["int main(void)", "{", f"    int {', '.join(self.LOCALS)};",
                  f"    int {', '.join(self.COUNTERS)};"]
        parts += [f"    {x} = {rng.randint(0, 9)};" for x in self.LOCALS]
        parts += self.block(max(1, n - len(self.LOCALS)), _Ctx(), 1)
        parts += ["    return (x0 + x1) & 255;", "}"]
        return "\n".join(parts) + "\n"


def stmt_program(rng: random.Random, n: int, max_depth=3) -> str:
    """A terminating Xd-C program with about n statements."""
    return StmtGen(rng, max_depth).program(n)
