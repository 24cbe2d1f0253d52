"""Size and timing statistics for translations."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .msvl import count_nodes, emit
from .translator import prgm_tr
from .xdc import ast as A
from .xdc import load


def nonblank_lines(text: str) -> int:
    return sum(1 for line in text.splitlines() if line.strip())


def xdc_nodes(prog: A.Program) -> int:
    return sum(1 for _ in A.walk(prog))


def statement_count(prog: A.Program) -> int:
    return sum(1 for n in A.walk(prog) if isinstance(n, A.Stmt) and not isinstance(n, A.Seq))


@dataclass
class FileStats:
    name: str
    loc: int
    lom: int
    seconds: float
    statements: int
    in_nodes: int
    out_nodes: int

    @property
    def ratio(self):
        return self.lom / self.loc if self.loc else 0.0

    def to_json(self):
        return {"file": self.name, "loc": self.loc, "lom": self.lom,
                "ratio": round(self.ratio, 4), "seconds": round(self.seconds, 6),
                "statements": self.statements, "in_nodes": self.in_nodes,
                "out_nodes": self.out_nodes}


def translate_timed(source: str, filename="<input>", repeat=1):
    """Frontend plus translation plus emission; returns (text, seconds, prog, mprog).
    With repeat > 1 the best time is reported."""
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        prog, info = load(source, filename)
        mprog = prgm_tr(prog, info)
        text = emit(mprog)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return text, best, prog, mprog


def file_stats(source: str, name="<input>", repeat=1) -> FileStats:
    text, dt, prog, mprog = translate_timed(source, name, repeat)
    return FileStats(name, nonblank_lines(source), nonblank_lines(text), dt,
                     statement_count(prog), xdc_nodes(prog), count_nodes(mprog))


def linear_fit(xs, ys):
    """Least-squares line through (xs, ys): (slope, intercept, r squared)."""
    from scipy.stats import linregress
    r = linregress(xs, ys)
    return r.slope, r.intercept, r.rvalue ** 2
