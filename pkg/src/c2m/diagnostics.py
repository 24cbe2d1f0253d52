"""Source spans, diagnostics and the error hierarchy shared by all stages."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Span:
    line: int = 0
    col: int = 0
    end_line: int = 0
    end_col: int = 0

    def __str__(self):
        return f"{self.line}:{self.col}"


NOSPAN = Span()


@dataclass(frozen=True)
class Diagnostic:
    message: str
    span: Span = NOSPAN
    severity: str = "error"
    item: int | None = None  # negative-list item, 1..14
    filename: str = "<input>"

    def format(self) -> str:
        tag = f" [item-{self.item}]" if self.item is not None else ""
        return (f"{self.filename}:{self.span.line}:{self.span.col}: "
                f"{self.severity}: {self.message}{tag}")

    def to_json(self) -> str:
        return json.dumps({
            "file": self.filename, "line": self.span.line, "col": self.span.col,
            "severity": self.severity, "message": self.message, "item": self.item,
        })

    def __str__(self):
        return self.format()


class C2MError(Exception):
    """Base class; carries one or more diagnostics."""

    def __init__(self, message: str, span: Span = NOSPAN, item: int | None = None,
                 diagnostics: list[Diagnostic] | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.item = item
        self.diagnostics = diagnostics or [Diagnostic(message, span, item=item)]

    def __str__(self):
        return f"{self.span}: {self.message}"


class LexError(C2MError):
    pass


class ParseError(C2MError):
    pass


class TypeCheckError(C2MError):
    pass


class SubsetError(C2MError):
    """Raised when a program uses negative-list constructs."""


class RuntimeFault(C2MError):
    """A runtime error inside either interpreter (undefined read, bad access, ...)."""


class Timeout(Exception):
    """Fuel exhausted."""


class Infeasible(Exception):
    """An MSVL program reduced to false (contradictory assignments)."""

    def __init__(self, message: str = "contradictory state"):
        super().__init__(message)
        self.message = message


@dataclass
class DiagnosticSink:
    filename: str = "<input>"
    items: list[Diagnostic] = field(default_factory=list)

    def error(self, message, span=NOSPAN, item=None):
        self.items.append(Diagnostic(message, span, "error", item, self.filename))

    def __bool__(self):
        return bool(self.items)
