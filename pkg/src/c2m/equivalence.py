"""Memory injection, state equivalence and differential runs.

The injection alpha maps each Xd-C block to an MSVL (block, offset) pair. It
is built by name: a source variable and its translated counterpart must
exist in both final snapshots. Values are equivalent when constants are
equal, or when pointers designate corresponding locations under alpha.
"""
from __future__ import annotations

import json
import math
import re
import time
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from .diagnostics import C2MError, RuntimeFault
from .externs import ExternModel
from .msvl_interp import DEFAULT_FUEL, Machine, _In, run_msvl
from .translator import KEY_VARS, Translator, mname, prgm_tr
from .values import UNDEF, Ptr, fmt_value
from .xdc import ast as A
from .xdc import load
from .xdc.printer import expr as show_expr
from .xdc_interp import Interpreter, run_program

_IDENT = re.compile(r"[A-Za-z_]\w*")


class InjectionError(Exception):
    pass


@dataclass
class Injection:
    """Partial map Xd-C block -> (MSVL block, offset)."""
    table: dict = field(default_factory=dict)

    def add(self, b, target):
        if b in self.table and self.table[b] != target:
            raise InjectionError(f"block {b} mapped twice")
        self.table[b] = target

    def get(self, b):
        return self.table.get(b)

    def check_injective(self):
        seen = {}
        for b, tgt in self.table.items():
            if tgt in seen:
                raise InjectionError(f"blocks {seen[tgt]} and {b} both map to {tgt}")
            seen[tgt] = b

    def __len__(self):
        return len(self.table)


@dataclass
class EquivVerdict:
    status: str  # equivalent | mismatch | both-timeout | both-error | verdict-mismatch
    witness: dict | None = None
    alpha: Injection | None = None
    survivors: list = field(default_factory=list)
    xdc: object = None
    msvl: object = None
    msvl_program: object = None

    @property
    def ok(self):
        return self.status in ("equivalent", "both-timeout")

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.survivors:
            out["survivors"] = self.survivors
        if self.alpha is not None:
            out["alpha"] = {str(b): list(t) for b, t in sorted(self.alpha.table.items())}
        return out


def msvl_path(path: str) -> str:
    """Xd-C variable path (``p.next[2]``) to its MSVL spelling."""
    return _IDENT.sub(lambda m: mname(m.group(0)), path)


def build_injection(xs, ms) -> tuple[Injection, list]:
    """alpha from the final snapshots of both runs, plus the MSVL-only
    variables that survived (key variables excluded)."""
    alpha = Injection()
    matched = set()
    for (scope, name), (b, _) in xs.vars.items():
        key = (scope, mname(name))
        if key not in ms.vars:
            raise InjectionError(f"variable {scope}::{name} has no MSVL counterpart")
        alpha.add(b, (ms.vars[key][0], 0))
        matched.add(key)
    for name, b in xs.funcs.items():
        if name == "main":
            continue
        mb = ms.funcs.get(mname(name))
        if mb is not None:
            alpha.add(b, (mb, 0))
    alpha.check_injective()
    survivors = sorted(f"{s}::{n}" for s, n in ms.vars
                       if (s, n) not in matched and n not in KEY_VARS)
    return alpha, survivors


def check_value_equiv(alpha: Injection, v, w) -> bool:
    if v is UNDEF or w is UNDEF:
        return v is UNDEF and w is UNDEF
    if isinstance(v, Ptr) or isinstance(w, Ptr):
        if not (isinstance(v, Ptr) and isinstance(w, Ptr)):
            return False
        tgt = alpha.get(v.block)
        return tgt is not None and w.block == tgt[0] and w.offset == v.offset + tgt[1]
    if isinstance(v, float) and isinstance(w, float) and math.isnan(v) and math.isnan(w):
        return True
    return type(v) is type(w) and v == w


def check_state_equiv(alpha: Injection, xs, ms) -> EquivVerdict:
    for (scope, name), (b, _) in xs.vars.items():
        key = (scope, mname(name))
        if key not in ms.vars or alpha.get(b) != (ms.vars[key][0], 0):
            return EquivVerdict("mismatch", {"path": f"{scope}::{name}",
                                             "reason": "location"}, alpha)
    for (scope, path), v in xs.values.items():
        w = ms.values.get((scope, msvl_path(path)), UNDEF)
        if not check_value_equiv(alpha, v, w):
            return EquivVerdict("mismatch", {"path": _show(scope, path), "xdc": fmt_value(v),
                                             "msvl": fmt_value(w)}, alpha)
    return EquivVerdict("equivalent", None, alpha)


def _show(scope, path):
    return path if scope == "global" else f"{scope}::{path}"


def _events_equiv(alpha, xe, me, prefix=False):
    """Index of the first differing event, or None."""
    n = min(len(xe), len(me))
    for k in range(n):
        a, b = xe[k], me[k]
        if a.name != b.name or len(a.args) != len(b.args):
            return k
        pairs = list(zip(a.args, b.args)) + [(a.result, b.result)]
        for v, w in pairs:
            if v is None or w is None:
                if v is not w:
                    return k
            elif alpha is not None:
                if not check_value_equiv(alpha, v, w):
                    return k
            elif isinstance(v, Ptr) or isinstance(w, Ptr):
                if not (isinstance(v, Ptr) and isinstance(w, Ptr)) or v.offset != w.offset:
                    return k
            elif v != w:
                return k
    if not prefix and len(xe) != len(me):
        return n
    return None


def extern_signatures(info):
    return {mname(n): info.functions[n].ftype for n in info.externs}


def differential_run(source: str, filename="<input>", fuel=DEFAULT_FUEL,
                     externs: ExternModel | None = None) -> EquivVerdict:
    """Translate, run both interpreters and compare. Frontend errors raise."""
    prog, info = load(source, filename)
    model = externs if externs is not None else ExternModel()
    mprog = prgm_tr(prog, info)
    xr = run_program(prog, info, fuel, model.fresh())
    mr = run_msvl(mprog, fuel, model.fresh(), extern_signatures(info))
    v = compare_runs(xr, mr)
    v.xdc, v.msvl, v.msvl_program = xr, mr, mprog
    return v


def compare_runs(xr, mr) -> EquivVerdict:
    if xr.status == "terminates" and mr.status == "terminates":
        try:
            alpha, survivors = build_injection(xr.snapshot, mr.snapshot)
        except InjectionError as ex:
            return EquivVerdict("mismatch", {"reason": str(ex)})
        if xr.exit_code != mr.exit_code:
            return EquivVerdict("mismatch", {"path": "exit code", "xdc": xr.exit_code,
                                             "msvl": mr.exit_code}, alpha, survivors)
        k = _events_equiv(alpha, xr.events, mr.events)
        if k is not None:
            return EquivVerdict("mismatch", _event_witness(k, xr.events, mr.events),
                                alpha, survivors)
        v = check_state_equiv(alpha, xr.snapshot, mr.snapshot)
        v.survivors = survivors
        return v
    if xr.status == "timeout" and mr.status == "timeout":
        k = _events_equiv(None, xr.events, mr.events, prefix=True)
        if k is not None:
            return EquivVerdict("mismatch", _event_witness(k, xr.events, mr.events))
        return EquivVerdict("both-timeout")
    if xr.status == "error" and mr.status == "error":
        return EquivVerdict("both-error", {"xdc": xr.error, "msvl": mr.error})
    return EquivVerdict("verdict-mismatch", {"xdc": xr.status, "msvl": mr.status,
                                             "xdc_error": xr.error, "msvl_error": mr.error})


def _event_witness(k, xe, me):
    show = lambda evs: str(evs[k]) if k < len(evs) else None  # noqa: E731
    return {"path": f"event {k}", "xdc": show(xe), "msvl": show(me)}


# expression probes
@dataclass
class Probe:
    text: str
    xdc: object
    msvl: object
    agree: bool


class _Fault:
    def __init__(self, msg):
        self.msg = msg

    def __repr__(self):
        return f"fault({self.msg})"


def probe_expressions(source: str, filename="<probe>") -> list[Probe]:
    """Evaluates the right side of each ``rK = e;`` in main with both
    evaluators over one shared initial store, without storing the result.
    Any other statement in main runs first on both sides as store setup.
    A fault on both sides counts as agreement."""
    prog, info = load(source, filename)
    tr = Translator(info)
    xi = Interpreter(prog, info)
    mm = Machine(prgm_tr(prog, info))
    xi.setup()
    mm.drive(mm.globals_stmt())
    probes, setup = [], []
    for s in A.flatten(prog.main.body):
        if isinstance(s, A.Assign) and isinstance(s.target, A.Var) \
                and s.target.name.startswith("r"):
            probes.append(s.value)
        elif not isinstance(s, A.Return):
            setup.append(s)
    for s in setup:
        xi.exec(s, {})
        mm.drive(_In(mm.globals, tr.stmt(s)))
    alpha = Injection()
    for name, (b, _) in xi.globals.items():
        alpha.add(b, (mm.globals.env[mname(name)][0], 0))
    out = []
    for e in probes:
        try:
            v = xi.rvalue(e, {})
        except RuntimeFault as ex:
            v = _Fault(ex.message)
        try:
            w = mm.eval_right(tr.expr(e))[0]
        except RuntimeFault as ex:
            w = _Fault(ex.message)
        if isinstance(v, _Fault) or isinstance(w, _Fault):
            ok = isinstance(v, _Fault) and isinstance(w, _Fault)
        else:
            ok = check_value_equiv(alpha, v, w)
        out.append(Probe(show_expr(e), v, w, ok))
    return out


# corpus cases
@dataclass
class CaseResult:
    name: str
    ok: bool
    verdict: EquivVerdict | None
    message: str = ""
    seconds: float = 0.0

    def to_json(self):
        out = {"name": self.name, "ok": self.ok, "message": self.message,
               "seconds": round(self.seconds, 4)}
        if self.verdict is not None:
            out["verdict"] = self.verdict.to_json()
        return out


class CaseError(Exception):
    """Malformed case directory."""


def snapshot_view(snap):
    """Snapshot values keyed by their printed path (``g``, ``main::x``)."""
    return {_show(scope, path): fmt_value(v) for (scope, path), v in snap.values.items()}


def run_case(case_dir, fuel=DEFAULT_FUEL) -> CaseResult:
    case = Path(case_dir)
    src = case / "input.c"
    ext = case / "externs.json"
    exp = case / "expected.verdict"
    for f in (src, ext):
        if not f.is_file():
            raise CaseError(f"{case.name}: missing {f.name}")
    try:
        model = ExternModel.load(ext)
    except (ValueError, json.JSONDecodeError) as ex:
        raise CaseError(f"{case.name}: bad externs.json: {ex}") from None
    expected = json.loads(exp.read_text()) if exp.is_file() else {"status": "equivalent"}
    # divergent cases may cap their own budget
    fuel = min(fuel, int(expected.get("fuel", fuel)))
    t0 = time.perf_counter()
    try:
        v = differential_run(src.read_text(), str(src), fuel, model)
    except C2MError as ex:
        return CaseResult(case.name, expected.get("status") == "rejected", None,
                          f"rejected: {ex}", time.perf_counter() - t0)
    dt = time.perf_counter() - t0
    want = expected.get("status", "equivalent")
    if v.status != want:
        return CaseResult(case.name, False, v, f"expected {want}, got {v.status}", dt)
    if "exit_code" in expected and v.xdc.exit_code != expected["exit_code"]:
        return CaseResult(case.name, False, v,
                          f"exit code {v.xdc.exit_code}, expected {expected['exit_code']}", dt)
    if "snapshot" in expected and v.xdc.snapshot is not None:
        view = snapshot_view(v.xdc.snapshot)
        for path, val in expected["snapshot"].items():
            if view.get(path) != val:
                v.witness = {"path": path, "expected": val, "actual": view.get(path)}
                v.status = "mismatch"
                return CaseResult(case.name, False, v, f"snapshot differs at {path}", dt)
    return CaseResult(case.name, True, v, v.status, dt)


def run_corpus(root, fuel=DEFAULT_FUEL):
    cases = sorted(p for p in Path(root).iterdir() if (p / "input.c").is_file())
    return [run_case(c, fuel) for c in cases]


def junit_xml(results, suite="c2m-diff") -> str:
    ts = ET.Element("testsuite", name=suite, tests=str(len(results)),
                    failures=str(sum(not r.ok for r in results)))
    for r in results:
        tc = ET.SubElement(ts, "testcase", name=r.name, time=f"{r.seconds:.4f}")
        if not r.ok:
            f = ET.SubElement(tc, "failure", message=r.message)
            if r.verdict is not None:
                f.text = json.dumps(r.verdict.to_json(), sort_keys=True)
    return ET.tostring(ts, encoding="unicode")


def json_summary(results) -> str:
    return json.dumps({"cases": [r.to_json() for r in results],
                       "passed": sum(r.ok for r in results),
                       "failed": sum(not r.ok for r in results)}, indent=2)
