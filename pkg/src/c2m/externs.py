"""Extern function models shared by both interpreters.

A fixture is a JSON object mapping an extern name to its model::

    {"read_int": {"returns": [3, 4]}, "tick": {"steps": 2}}

``returns`` is a script of result values consumed one per call (the last one
repeats once exhausted, an empty script yields 0). ``steps`` is the length of
the model interval an extern runs over; 0 (the default) means the call runs
in a single state. Externs never modify program memory. Names without an
entry fall back to a built-in table of output-style externs.
"""
from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from pathlib import Path

from .diagnostics import RuntimeFault
from .values import fmt_value

BUILTIN_OUTPUT = ("print_int", "print_char", "print_double", "putchar", "print_ptr",
                  "printf", "puts", "emit")


@dataclass(frozen=True)
class Event:
    """Observable extern call: name(args) -> result."""
    name: str
    args: tuple
    result: object

    def to_json(self):
        return {"call": self.name, "args": [fmt_value(a) for a in self.args],
                "result": fmt_value(self.result)}

    def __str__(self):
        args = ", ".join(str(fmt_value(a)) for a in self.args)
        return f"{self.name}({args}) -> {fmt_value(self.result)}"


@dataclass
class ExternModel:
    spec: dict = field(default_factory=dict)
    counters: dict = field(default_factory=dict)
    events: list = field(default_factory=list)

    @classmethod
    def load(cls, path):
        if path is None:
            return cls()
        data = json.loads(Path(path).read_text())
        if not isinstance(data, dict):
            raise ValueError("extern fixture must be a JSON object")
        return cls(spec=data)

    def fresh(self):
        return ExternModel(spec=copy.deepcopy(self.spec))

    def knows(self, name):
        return name in self.spec or name in BUILTIN_OUTPUT

    def steps(self, name):
        return int(self.spec.get(name, {}).get("steps", 0))

    def call(self, name, args, is_void=False):
        """Runs the model, records the event and returns the result value."""
        if not self.knows(name):
            raise RuntimeFault(f"unknown extern '{name}'")
        script = self.spec.get(name, {}).get("returns", [])
        k = self.counters.get(name, 0)
        self.counters[name] = k + 1
        if is_void:
            res = None
        elif not script:
            res = 0
        else:
            res = script[min(k, len(script) - 1)]
        self.events.append(Event(name, tuple(args), res))
        return res
