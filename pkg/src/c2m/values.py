"""Runtime values and primitive arithmetic shared by both interpreters.

Only the scalar core lives here: integer wrap-around, float rounding, casts
and the operator table. Each interpreter owns its own state model.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass

from .diagnostics import RuntimeFault
from .types import CType, FloatType, IntType, PointerType


@dataclass(frozen=True)
class Ptr:
    block: int
    offset: int

    def __str__(self):
        return f"ptr({self.block},{self.offset})"


class _Undef:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Undef"

    def __reduce__(self):
        return (_Undef, ())


UNDEF = _Undef()


def wrap_int(n: int, t: IntType) -> int:
    bits = t.bits
    n &= (1 << bits) - 1
    if t.signed and n >= 1 << (bits - 1):
        n -= 1 << bits
    return n


def round_float(x: float, t: FloatType) -> float:
    if t.bits == 32:
        try:
            return struct.unpack("f", struct.pack("f", x))[0]
        except OverflowError:
            return math.copysign(math.inf, x)
    return float(x)


def convert(v, src: CType, dst: CType):
    """Arithmetic conversion of v from src to dst (casts and implicit
    same-class conversions)."""
    if isinstance(dst, IntType):
        if isinstance(v, float):
            if math.isnan(v) or math.isinf(v):
                raise RuntimeFault("cast of non-finite float to integer")
            return wrap_int(int(v), dst)
        if isinstance(v, bool):
            v = int(v)
        if isinstance(v, int):
            return wrap_int(v, dst)
    if isinstance(dst, FloatType):
        if isinstance(v, bool):
            v = int(v)
        if isinstance(v, (int, float)):
            return round_float(float(v), dst)
    if isinstance(dst, PointerType):
        if isinstance(v, Ptr):
            return v
        if isinstance(v, int) and v == 0:
            return 0
    raise RuntimeFault(f"cannot convert {v!r} to {dst}")


def truth(v) -> bool:
    if v is UNDEF:
        raise RuntimeFault("read of undefined value")
    if isinstance(v, Ptr):
        return True
    return v != 0


def _idiv(a, b):
    if b == 0:
        raise RuntimeFault("division by zero")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


def _imod(a, b):
    if b == 0:
        raise RuntimeFault("division by zero")
    return a - b * _idiv(a, b)


def arith(op: str, a, b, t: CType):
    """Binary arithmetic/bitwise op on two values already of type t."""
    if isinstance(t, IntType):
        if op == "+":
            r = a + b
        elif op == "-":
            r = a - b
        elif op == "*":
            r = a * b
        elif op == "/":
            r = _idiv(a, b)
        elif op == "%":
            r = _imod(a, b)
        elif op == "&":
            r = a & b
        elif op == "|":
            r = a | b
        elif op == "^":
            r = a ^ b
        elif op in ("<<", ">>"):
            if b < 0 or b >= t.bits:
                raise RuntimeFault(f"shift count {b} out of range")
            if op == "<<":
                r = a << b
            else:
                ua = a if t.signed else a & ((1 << t.bits) - 1)
                r = ua >> b
        else:
            raise RuntimeFault(f"bad integer operator {op}")
        return wrap_int(r, t)
    if isinstance(t, FloatType):
        if op == "+":
            r = a + b
        elif op == "-":
            r = a - b
        elif op == "*":
            r = a * b
        elif op == "/":
            if b == 0:
                raise RuntimeFault("division by zero")
            r = a / b
        else:
            raise RuntimeFault(f"operator {op} undefined on {t}")
        return round_float(r, t)
    raise RuntimeFault(f"operator {op} undefined on {t}")


def compare(op: str, a, b) -> int:
    if op in ("==", "="):
        return int(a == b)
    if op == "!=":
        return int(a != b)
    if isinstance(a, Ptr) or isinstance(b, Ptr):
        raise RuntimeFault("relational comparison of pointers")
    if op == "<":
        return int(a < b)
    if op == "<=":
        return int(a <= b)
    if op == ">":
        return int(a > b)
    if op == ">=":
        return int(a >= b)
    raise RuntimeFault(f"bad comparison {op}")


def unary(op: str, v, t: CType):
    if op == "!":
        return int(not truth(v))
    if op == "+":
        return v
    if op == "-":
        if isinstance(t, IntType):
            return wrap_int(-v, t)
        if isinstance(t, FloatType):
            return -v
    if op == "~" and isinstance(t, IntType):
        return wrap_int(~v, t)
    raise RuntimeFault(f"unary {op} undefined on {t}")


def fmt_value(v):
    """JSON-friendly rendering of a value."""
    if v is UNDEF:
        return "Undef"
    if isinstance(v, Ptr):
        return {"ptr": [v.block, v.offset]}
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            return repr(v)
        return v
    return v
