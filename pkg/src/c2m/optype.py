"""Operator typing shared by the Xd-C checker and the MSVL evaluator.

No implicit promotions: integer operands must have the same width (mixed
signedness yields unsigned), floats must have the same width, and ints never
mix with floats. A literal constant adapts to the type of the other operand.
Pointer arithmetic is limited to ptr±int and ptr-ptr of the same type.
"""
from __future__ import annotations

from .types import INT, CType, FloatType, FuncType, IntType, PointerType, VoidType


class OpTypeError(Exception):
    pass


ARITH = {"+", "-", "*", "/", "%"}
BITWISE = {"&", "|", "^"}
SHIFT = {"<<", ">>"}
EQUALITY = {"==", "=", "!="}
RELATIONAL = {"<", "<=", ">", ">="}
LOGICAL = {"&&", "||", "and", "or"}


def unify(lt: CType, rt: CType, llit=False, rlit=False) -> CType:
    if llit and not rlit and _adapts(lt, rt):
        return rt
    if rlit and not llit and _adapts(rt, lt):
        return lt
    if isinstance(lt, IntType) and isinstance(rt, IntType):
        if lt.bits != rt.bits:
            raise OpTypeError(f"mixed-width integer operands {lt} and {rt}")
        if lt.signed != rt.signed:
            return lt if not lt.signed else rt
        return lt
    if isinstance(lt, FloatType) and isinstance(rt, FloatType):
        if lt.bits != rt.bits:
            raise OpTypeError(f"mixed-width float operands {lt} and {rt}")
        return lt
    raise OpTypeError(f"operands of types {lt} and {rt} need an explicit cast")


def _adapts(lit_t, other):
    if isinstance(lit_t, IntType):
        return other.is_arith()
    if isinstance(lit_t, FloatType):
        return other.is_float()
    return False


def _object_ptr(t):
    return (isinstance(t, PointerType) and not isinstance(t.target, (VoidType, FuncType)))


def binop_type(op, lt, rt, llit=False, rlit=False, lnull=False, rnull=False):
    """Returns (left operand type, right operand type, result type, kind).

    kind is one of arith, bitwise, shift, cmp, pcmp, logic, padd, psub, pdiff.
    lnull/rnull mark an integer literal 0 usable as a null pointer."""
    if op in LOGICAL:
        if not (lt.is_scalar() and rt.is_scalar()):
            raise OpTypeError(f"operands of '{op}' must be scalar")
        return lt, rt, INT, "logic"
    if op in EQUALITY:
        if lt.is_arith() and rt.is_arith():
            u = unify(lt, rt, llit, rlit)
            return u, u, INT, "cmp"
        if lt.is_pointer() and rt.is_pointer():
            if lt == rt or isinstance(lt.target, VoidType) or isinstance(rt.target, VoidType):
                return lt, rt, INT, "pcmp"
            raise OpTypeError(f"comparison of {lt} with {rt}")
        if lt.is_pointer() and rnull:
            return lt, lt, INT, "pcmp"
        if rt.is_pointer() and lnull:
            return rt, rt, INT, "pcmp"
        raise OpTypeError(f"comparison of {lt} with {rt}")
    if op in RELATIONAL:
        if lt.is_pointer() or rt.is_pointer():
            raise OpTypeError(f"relational operator '{op}' on pointer operands")
        if not (lt.is_arith() and rt.is_arith()):
            raise OpTypeError(f"operands of '{op}' must be arithmetic")
        u = unify(lt, rt, llit, rlit)
        return u, u, INT, "cmp"
    if op in ("+", "-"):
        if _object_ptr(lt) and rt.is_integer():
            return lt, rt, lt, "padd" if op == "+" else "psub"
        if op == "+" and lt.is_integer() and _object_ptr(rt):
            return lt, rt, rt, "padd"
        if op == "-" and _object_ptr(lt) and lt == rt:
            return lt, rt, INT, "pdiff"
        if lt.is_pointer() or rt.is_pointer():
            raise OpTypeError(f"invalid pointer arithmetic {lt} {op} {rt}")
    if op in ARITH:
        if not (lt.is_arith() and rt.is_arith()):
            raise OpTypeError(f"operands of '{op}' must be arithmetic")
        u = unify(lt, rt, llit, rlit)
        if op == "%" and not u.is_integer():
            raise OpTypeError("'%' needs integer operands")
        return u, u, u, "arith"
    if op in BITWISE:
        if not (lt.is_integer() and rt.is_integer()):
            raise OpTypeError(f"operands of '{op}' must be integers")
        u = unify(lt, rt, llit, rlit)
        return u, u, u, "bitwise"
    if op in SHIFT:
        if not (lt.is_integer() and rt.is_integer()):
            raise OpTypeError(f"operands of '{op}' must be integers")
        return lt, rt, lt, "shift"
    raise OpTypeError(f"unknown operator '{op}'")


def unop_type(op, t):
    if op == "!":
        if not t.is_scalar():
            raise OpTypeError("operand of '!' must be scalar")
        return INT
    if op in ("+", "-"):
        if not t.is_arith():
            raise OpTypeError(f"operand of unary '{op}' must be arithmetic")
        return t
    if op == "~":
        if not t.is_integer():
            raise OpTypeError("operand of '~' must be an integer")
        return t
    raise OpTypeError(f"unknown unary operator '{op}'")


def cond_type(at, bt, alit=False, blit=False, anull=False, bnull=False):
    if at.is_arith() and bt.is_arith():
        return unify(at, bt, alit, blit)
    if at.is_pointer() and bt.is_pointer() and at == bt:
        return at
    if at.is_pointer() and bnull:
        return at
    if bt.is_pointer() and anull:
        return bt
    raise OpTypeError(f"conditional branches of types {at} and {bt}")


def assignable(dst, src, src_lit=False, src_null=False):
    """True when a value of type src may be stored into dst."""
    if isinstance(dst, IntType):
        return isinstance(src, IntType)
    if isinstance(dst, FloatType):
        return isinstance(src, FloatType) or (src_lit and isinstance(src, IntType))
    if isinstance(dst, PointerType):
        if src_null:
            return True
        if isinstance(src, PointerType):
            return (dst == src or isinstance(dst.target, VoidType)
                    or isinstance(src.target, VoidType))
    return False


def cast_ok(dst, src):
    return dst.is_arith() and src.is_arith()
