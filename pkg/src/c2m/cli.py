"""Command-line driver: translate, run, diff, stats.

Exit codes: 0 ok, 1 internal error, 2 input or diagnostic error,
3 equivalence failure, 4 timeout.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .diagnostics import C2MError
from .equivalence import (CaseError, extern_signatures, json_summary, junit_xml,
                          run_case, snapshot_view)
from .externs import ExternModel
from .msvl import emit, parse_msvl
from .msvl_interp import dump_interval, run_msvl
from .stats import file_stats, linear_fit, translate_timed
from .translator import prgm_tr
from .values import fmt_value
from .xdc import load
from .xdc_interp import run_program

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_EQUIV, EXIT_TIMEOUT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def default_fuel():
    raw = os.environ.get("C2M_FUEL")
    if raw is None:
        return 1_000_000
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"C2M_FUEL must be an integer, got {raw!r}") from None
    return n


def _fuel(args):
    n = args.fuel if args.fuel is not None else default_fuel()
    if n < 1:
        raise UsageError("fuel must be at least 1")
    return n


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as ex:
        raise UsageError(f"cannot read {path}: {ex.strerror}") from None


def _report(ex: C2MError):
    for d in ex.diagnostics:
        print(d.format(), file=sys.stderr)


def cmd_translate(args):
    src = _read(args.input)
    text, dt, _, mprog = translate_timed(src, args.input)
    if args.canonical:
        again = emit(parse_msvl(text))
        if again != text:
            print("error: emitted text is not a parse/emit fixpoint", file=sys.stderr)
            return EXIT_INTERNAL
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    st = file_stats(src, args.input)
    line = {"file": args.input, "loc": st.loc, "lom": st.lom, "ms": round(dt * 1000, 3)}
    if args.json:
        print(json.dumps(line), file=sys.stderr)
    else:
        print(f"{args.input}: LOC {st.loc}  LOM {st.lom}  time {dt * 1000:.3f} ms",
              file=sys.stderr)
    return EXIT_OK


def _externs(args):
    if args.externs is None:
        return ExternModel()
    try:
        return ExternModel.load(args.externs)
    except (OSError, ValueError) as ex:
        raise UsageError(f"bad extern fixture {args.externs}: {ex}") from None


def cmd_run(args):
    fuel = _fuel(args)
    model = _externs(args)
    src = _read(args.input)
    if args.lang == "xdc":
        prog, info = load(src, args.input)
        res = run_program(prog, info, fuel, model, trace_stores=args.trace is not None)
        if args.trace:
            with open(args.trace, "w") as fh:
                for s in res.stores:
                    fh.write(json.dumps({"store": s["store"], "value": fmt_value(s["value"])})
                             + "\n")
                for e in res.events:
                    fh.write(json.dumps(e.to_json()) + "\n")
                if res.snapshot is not None:
                    fh.write(json.dumps({"snapshot": snapshot_view(res.snapshot)}) + "\n")
        length = None
    else:
        if args.input.endswith(".c"):
            prog, info = load(src, args.input)
            mprog, sigs = prgm_tr(prog, info), extern_signatures(info)
        else:
            mprog, sigs = parse_msvl(src), {}
        res = run_msvl(mprog, fuel, model, sigs, record=args.dump_interval is not None,
                       require_exit=args.input.endswith(".c"))
        if args.dump_interval:
            Path(args.dump_interval).write_text(dump_interval(res.interval))
        length = res.interval.length
    out = {"status": res.status, "exit_code": res.exit_code,
           "events": [e.to_json() for e in res.events]}
    if res.error:
        out["error"] = res.error
    if length is not None:
        out["interval_length"] = length
    if res.snapshot is not None:
        out["snapshot"] = snapshot_view(res.snapshot)
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        if res.status == "terminates" and res.exit_code is not None:
            print(f"terminates({res.exit_code})")
        else:
            print(res.status)
        for e in res.events:
            print(f"  {e}")
        if length is not None:
            print(f"  interval length {length}")
        if res.error:
            print(f"  {res.error}")
    if res.status == "timeout":
        return EXIT_TIMEOUT
    if res.status != "terminates":
        return EXIT_INPUT
    return EXIT_OK


def cmd_diff(args):
    fuel = _fuel(args)
    root = Path(args.case)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    if (root / "input.c").is_file():
        cases = [root]
    else:
        cases = sorted(p for p in root.iterdir() if p.is_dir())
        if not cases:
            raise UsageError(f"{root} holds no cases")
    results = [run_case(c, fuel) for c in cases]
    if args.junit:
        Path(args.junit).write_text(junit_xml(results))
    if args.json:
        print(json_summary(results))
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            extra = ""
            if not r.ok and r.verdict is not None and r.verdict.witness:
                extra = f"  witness {json.dumps(r.verdict.witness, sort_keys=True)}"
            print(f"{mark} {r.name}: {r.message}{extra}")
        print(f"{sum(r.ok for r in results)}/{len(results)} passed")
    return EXIT_OK if all(r.ok for r in results) else EXIT_EQUIV


def cmd_stats(args):
    root = Path(args.corpus)
    files = [root] if root.is_file() else sorted(root.rglob("*.c"))
    rows = []
    for f in files:
        try:
            rows.append(file_stats(f.read_text(), str(f), repeat=args.repeat))
        except C2MError:
            continue
    agg = {"files": len(rows), "loc": sum(r.loc for r in rows),
           "lom": sum(r.lom for r in rows)}
    agg["ratio"] = agg["lom"] / agg["loc"] if agg["loc"] else 0.0
    agg["mean_ratio"] = sum(r.ratio for r in rows) / len(rows) if rows else 0.0
    fit = None
    if len(rows) >= 3 and len({r.statements for r in rows}) >= 2:
        slope, icpt, r2 = linear_fit([r.statements for r in rows], [r.seconds for r in rows])
        fit = {"slope": slope, "intercept": icpt, "r2": r2}
    if args.json:
        print(json.dumps({"rows": [r.to_json() for r in rows], "total": agg, "fit": fit},
                         indent=2))
        return EXIT_OK
    print(f"{'file':40} {'LOC':>6} {'LOM':>6} {'ratio':>6} {'ms':>9}")
    for r in rows:
        print(f"{r.name[-40:]:40} {r.loc:6} {r.lom:6} {r.ratio:6.2f} {r.seconds * 1000:9.3f}")
    print(f"{'total':40} {agg['loc']:6} {agg['lom']:6} {agg['ratio']:6.2f}")
    print(f"mean LOM/LOC {agg['mean_ratio']:.3f}")
    if fit is None:
        print("linear fit: not enough distinct sizes")
    else:
        print(f"linear fit: time = {fit['slope']:.3e} * statements + {fit['intercept']:.3e}"
              f"  (R^2 {fit['r2']:.4f})")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="c2m", description="Xd-C to MSVL translator and "
                                "differential harness.")
    sub = p.add_subparsers(dest="cmd", required=True)

    t = sub.add_parser("translate", help="translate an Xd-C file to MSVL")
    t.add_argument("input")
    t.add_argument("-o", "--output")
    t.add_argument("--canonical", action="store_true",
                   help="check that the output is a parse/emit fixpoint")
    t.add_argument("--json", action="store_true")
    t.set_defaults(fn=cmd_translate)

    r = sub.add_parser("run", help="run one interpreter")
    r.add_argument("lang", choices=["xdc", "msvl"])
    r.add_argument("input")
    r.add_argument("--fuel", type=int)
    r.add_argument("--externs")
    r.add_argument("--json", action="store_true")
    r.add_argument("--trace", help="JSON-lines trace file (xdc)")
    r.add_argument("--dump-interval", help="JSON-lines interval file (msvl)")
    r.set_defaults(fn=cmd_run)

    d = sub.add_parser("diff", help="differential check of a case or a corpus")
    d.add_argument("case")
    d.add_argument("--fuel", type=int)
    d.add_argument("--json", action="store_true")
    d.add_argument("--junit")
    d.set_defaults(fn=cmd_diff)

    s = sub.add_parser("stats", help="LOC/LOM and timing over a corpus")
    s.add_argument("corpus")
    s.add_argument("--repeat", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_stats)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except C2MError as ex:
        _report(ex)
        return EXIT_INPUT
    except (UsageError, CaseError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as ex:  # noqa: BLE001
        print(f"internal error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
