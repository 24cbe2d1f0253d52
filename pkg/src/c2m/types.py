"""Type model shared by Xd-C and the MSVL subset.

Sizes follow a fixed 32-bit model: char 1, short 2, int/long 4, pointers 4,
float 4, double and long double 8. Structs are packed in declaration order.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class CType:
    def is_integer(self):
        return False

    def is_float(self):
        return False

    def is_arith(self):
        return self.is_integer() or self.is_float()

    def is_pointer(self):
        return False

    def is_scalar(self):
        return self.is_arith() or self.is_pointer()


INT_WIDTH = {"char": 8, "short": 16, "int": 32, "long": 32}


@dataclass(frozen=True)
class IntType(CType):
    kind: str  # char | short | int | long
    signed: bool = True
    spelling: str = field(default="", compare=False)

    @property
    def bits(self):
        return INT_WIDTH[self.kind]

    def is_integer(self):
        return True

    def spell(self):
        if self.spelling:
            return self.spelling
        return self.kind if self.signed else f"unsigned {self.kind}"

    def __str__(self):
        return self.spell()


@dataclass(frozen=True)
class FloatType(CType):
    kind: str  # float | double | long double

    @property
    def bits(self):
        return 32 if self.kind == "float" else 64

    def is_float(self):
        return True

    def spell(self):
        return self.kind

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class VoidType(CType):
    def spell(self):
        return "void"

    def __str__(self):
        return "void"


@dataclass(frozen=True)
class PointerType(CType):
    target: CType

    def is_pointer(self):
        return True

    def spell(self):
        return f"{self.target.spell()}*"

    def __str__(self):
        return self.spell()


@dataclass(frozen=True)
class FuncType(CType):
    ret: CType
    params: tuple = ()

    def spell(self):
        ps = ", ".join(p.spell() for p in self.params)
        return f"{self.ret.spell()} (*)({ps})"

    def __str__(self):
        return self.spell()


@dataclass(frozen=True)
class StructType(CType):
    name: str

    def spell(self):
        return f"struct {self.name}"

    def __str__(self):
        return self.spell()


@dataclass(frozen=True)
class ArrayType(CType):
    elem: CType
    dims: tuple  # one or two positive extents

    def spell(self):
        return self.elem.spell() + "".join(f"[{d}]" for d in self.dims)

    def __str__(self):
        return self.spell()


INT = IntType("int")
UINT = IntType("int", False)
CHAR = IntType("char")
UCHAR = IntType("char", False)
SHORT = IntType("short")
LONG = IntType("long")
FLOAT = FloatType("float")
DOUBLE = FloatType("double")
VOID = VoidType()


def is_fptr(t):
    return isinstance(t, PointerType) and isinstance(t.target, FuncType)


class StructTable:
    """Struct definitions in scope: name -> list of (field name, type)."""

    def __init__(self, structs=None):
        self.structs: dict[str, list[tuple[str, CType]]] = dict(structs or {})

    def define(self, name, fields):
        self.structs[name] = list(fields)

    def fields(self, name):
        if name not in self.structs:
            raise KeyError(name)
        return self.structs[name]

    def sizeof(self, t: CType) -> int:
        if isinstance(t, IntType):
            return t.bits // 8
        if isinstance(t, FloatType):
            return t.bits // 8
        if isinstance(t, PointerType):
            return 4
        if isinstance(t, StructType):
            return sum(self.sizeof(ft) for _, ft in self.fields(t.name))
        if isinstance(t, ArrayType):
            n = 1
            for d in t.dims:
                n *= d
            return n * self.sizeof(t.elem)
        if isinstance(t, FuncType):
            return 4
        raise TypeError(f"sizeof undefined for {t}")

    def field_offset(self, sname, fname):
        """Returns (offset, type) or None when the field is absent."""
        off = 0
        for n, ft in self.fields(sname):
            if n == fname:
                return off, ft
            off += self.sizeof(ft)
        return None

    def leaves(self, t: CType, path="", offset=0):
        """Scalar cells of an object: yields (path suffix, offset, scalar type)."""
        if isinstance(t, ArrayType):
            esz = self.sizeof(t.elem)
            if len(t.dims) == 1:
                for i in range(t.dims[0]):
                    yield from self.leaves(t.elem, f"{path}[{i}]", offset + i * esz)
            else:
                n, m = t.dims
                for i in range(n):
                    for j in range(m):
                        yield from self.leaves(t.elem, f"{path}[{i}][{j}]",
                                               offset + (i * m + j) * esz)
        elif isinstance(t, StructType):
            off = offset
            for n, ft in self.fields(t.name):
                yield from self.leaves(ft, f"{path}.{n}", off)
                off += self.sizeof(ft)
        else:
            yield path, offset, t


def chunk_of(t: CType) -> str | None:
    """Access mode: the memory chunk a scalar type is loaded/stored with."""
    if isinstance(t, IntType):
        if t.bits == 32:
            return "int32"
        return f"int{t.bits}{'signed' if t.signed else 'unsigned'}"
    if isinstance(t, FloatType):
        return "float32" if t.bits == 32 else "float64"
    if isinstance(t, PointerType):
        return "int32"
    return None  # arrays by reference, structs and void by nothing
