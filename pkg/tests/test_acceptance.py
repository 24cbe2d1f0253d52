"""Acceptance suite. Each test checks one criterion and reports a PASS/FAIL line."""
import ast
import gc
import json
import random
import re
import subprocess
import sys
import time

from c2m.diagnostics import SubsetError
from c2m.equivalence import Injection, check_value_equiv, probe_expressions, run_corpus
from c2m.msvl_interp import Machine, run_msvl
from c2m.stats import file_stats, linear_fit, translate_timed
from c2m.synth import expr_program, stmt_program
from c2m.translator import Translator, prgm_tr
from c2m.values import Ptr
from c2m.xdc import ast as A
from c2m.xdc import load
from c2m.xdc_interp import Interpreter

from conftest import ACCEPTANCE, CASES, GOLDEN, HERE, NEGATIVE, SYNTHETIC
from tokmatch import token_match

# output nodes per input node, frozen across the size series
K_NODES = 2.5


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def test_c1_golden_translation_items():
    t0 = time.perf_counter()
    failed = []
    for k in range(1, 9):
        text = translate_timed((GOLDEN / f"item{k}.c").read_text())[0]
        if not token_match((GOLDEN / f"item{k}.expected").read_text(), text):
            failed.append(k)
    dt = time.perf_counter() - t0
    report(1, not failed and dt < 1.0,
           f"8 golden items, mismatched {failed or 'none'}, {dt:.3f} s")


def test_c2_fragment_end_to_end():
    text = translate_timed((GOLDEN / "mtf.c").read_text())[0]
    report(2, text == (GOLDEN / "mtf.m").read_text(),
           f"fragment emits the frozen golden ({len(text.splitlines())} lines)")


def test_c3_differential_suite():
    t0 = time.perf_counter()
    results = run_corpus(CASES, fuel=10**6)
    dt = time.perf_counter() - t0
    programs = [r for r in results if r.verdict is not None]
    seen = set()
    for r in programs:
        seen |= {k for k, n in r.verdict.xdc.rules.items() if n}
    missing = [f"T{k}" for k in range(1, 27) if f"T{k}" not in seen]
    bad = [r.name for r in results if not r.ok]
    report(3, len(programs) >= 60 and not bad and not missing and dt < 60,
           f"{len(programs)} programs, failures {bad or 'none'}, "
           f"uncovered rules {missing or 'none'}, {dt:.1f} s")


def test_c4_random_expression_equivalence():
    t0 = time.perf_counter()
    total = agree = 0
    first_bad = None
    for seed in range(100):
        for p in probe_expressions(expr_program(random.Random(seed), 100)):
            total += 1
            agree += p.agree
            if not p.agree and first_bad is None:
                first_bad = (seed, p.text, p.xdc, p.msvl)
    dt = time.perf_counter() - t0
    report(4, total >= 10_000 and agree == total and dt < 30,
           f"{agree}/{total} probes agree, {dt:.1f} s"
           + (f", first disagreement {first_bad}" if first_bad else ""))


SEMANTICS = [HERE / "test_xdc_interp.py", HERE / "test_msvl_interp.py"]
ADDITION_ROWS = ["test_add_int_int", "test_add_float_float", "test_add_double_double",
          "test_add_pointer_int", "test_add_int_pointer", "test_add_otherwise_undefined"]
RULES = ([f"L{k}" for k in range(1, 7)] + [f"R{k}" for k in range(1, 10)]
         + [f"B{k}" for k in range(1, 7)]
         + ["SKIP", "UASS", "AND", "NEXT", "ALW1", "ALW2", "CHOP1", "CHOP2", "CHOP3",
            "CHOP4", "IF", "WHL", "F1", "F2", "F3", "T1", "T3"]
         + ["MIN1", "MIN2", "TR1", "TR2", "FUN", "EXT1", "EXT2", "EXT3"])
CONTRACTS = ["test_unit_assignment_interval_has_length_two", "test_final_configuration_shape"]


def _inventory(path):
    """Labels named by test functions or used as strings inside them."""
    tree = ast.parse(path.read_text())
    names, labels = set(), set()
    for node in ast.walk(tree):
        if isinstance(node, ast.FunctionDef) and node.name.startswith("test_"):
            names.add(node.name)
            labels.update(node.name.split("_"))
            for dec in node.decorator_list:
                labels.update(c.value for c in ast.walk(dec)
                              if isinstance(c, ast.Constant) and isinstance(c.value, str))
            labels.update(c.value for c in ast.walk(node)
                          if isinstance(c, ast.Constant) and isinstance(c.value, str))
    return names, labels


def test_c5_semantics_unit_tests():
    names, labels = set(), set()
    for p in SEMANTICS:
        n, lab = _inventory(p)
        names |= n
        labels |= lab
    missing = [r for r in RULES if r not in labels]
    missing += [t for t in ADDITION_ROWS + CONTRACTS if t not in names]
    run = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                          *map(str, SEMANTICS)], capture_output=True, text=True, cwd=HERE.parent)
    tail = run.stdout.strip().splitlines()[-1] if run.stdout.strip() else run.stderr[-200:]
    report(5, not missing and run.returncode == 0,
           f"{len(RULES)} rules + 6 addition rows + 2 contracts covered, "
           f"missing {missing or 'none'}; unit run: {tail}")


def test_c6_pointer_offset_law_sweep():
    """Stores a pointer on each side, evaluates ``p + j`` with both evaluators
    and checks the results stay related by alpha."""
    decls = "char *pc; short *ps; int *pi; double *pd; int j; "
    prog, info = load(decls + "int main(void){pc = pc + j; ps = ps + j; "
                      "pi = pi + j; pd = pd + j; return 0;}")
    exprs = {s.target.name: s.value for s in A.flatten(prog.main.body)[:4]}
    xi = Interpreter(prog, info)
    xi.setup()
    mm = Machine(prgm_tr(prog, info))
    mm.drive(mm.globals_stmt())
    tr = Translator(info)
    rng = random.Random(2024)
    violations = 0
    for _ in range(10_000):
        xbs = rng.sample(range(1, 10**6), 6)
        mbs = rng.sample(range(1, 10**6), 6)
        alpha = Injection({b: (m, rng.randint(0, 256)) for b, m in zip(xbs, mbs)})
        alpha.check_injective()
        b = rng.choice(xbs)
        bm, delta = alpha.get(b)
        i, j = rng.randint(0, 4096), rng.randint(-512, 512)
        name = rng.choice(sorted(exprs))
        if not check_value_equiv(alpha, Ptr(b, i), Ptr(bm, i + delta)):
            violations += 1
            continue
        xb, xt = xi.globals[name]
        xi.storeval(xt, xb, 0, Ptr(b, i))
        xi.storeval(xi.globals["j"][1], xi.globals["j"][0], 0, j)
        mm.values[(mm.globals.env[name][0], 0)] = Ptr(bm, i + delta)
        mm.values[(mm.globals.env["j"][0], 0)] = j
        v = xi.rvalue(exprs[name], {})
        w = mm.eval_right(tr.expr(exprs[name]))[0]
        violations += not check_value_equiv(alpha, v, w)
    report(6, violations == 0, f"10000 (alpha, b, i, j) instances, {violations} violations")


def test_c7_framing():
    checked = pairs = 0
    broken = None
    for seed in range(1_000):
        p, info = load(stmt_program(random.Random(seed), 20))
        r = run_msvl(prgm_tr(p, info), 10**6, record=True)
        if r.status != "terminates":
            broken = broken or (seed, r.status, None)
            continue
        checked += 1
        states = r.interval.states
        for a, b in zip(states, states[1:]):
            for path, v in b["values"].items():
                if path in a["values"] and path not in b["assigned"]:
                    pairs += 1
                    if a["values"][path] != v and broken is None:
                        broken = (seed, b["i"], path)
    report(7, checked == 1_000 and broken is None,
           f"{checked} programs, {pairs} unassigned (state, variable) pairs framed"
           + (f", first break {broken}" if broken else ""))


def test_c8_linear_translation():
    sources = [stmt_program(random.Random(k), 2**k) for k in range(5, 13)]
    best = [None] * len(sources)
    # collector pauses land on arbitrary sizes, so time with it off; rounds
    # sweep the whole series so a slow spell hits every size alike
    gc.collect()
    gc.disable()
    try:
        for _ in range(5):
            for n, src in enumerate(sources):
                row = file_stats(src, f"k{n + 5}")
                if best[n] is None or row.seconds < best[n].seconds:
                    best[n] = row
                gc.collect()
    finally:
        gc.enable()
    rows = best
    slope, _, r2 = linear_fit([r.statements for r in rows], [r.seconds for r in rows])
    worst = max(r.out_nodes / r.in_nodes for r in rows)
    report(8, r2 > 0.98 and worst <= K_NODES,
           f"R^2 {float(r2):.4f}, slope {float(slope) * 1e6:.1f} us/statement, "
           f"max out/in nodes {worst:.3f} (K = {K_NODES})")


def test_c9_expansion_ratio():
    baseline = json.loads((SYNTHETIC / "baseline.json").read_text())
    lo, hi = baseline["band"]
    ratios = [file_stats(f.read_text(), f.name).ratio for f in sorted(SYNTHETIC.glob("*.c"))]
    mean = sum(ratios) / len(ratios)
    report(9, len(ratios) > 0 and lo <= mean <= hi,
           f"mean LOM/LOC {mean:.3f} over {len(ratios)} files, band [{lo}, {hi}]")


def test_c10_negative_list():
    seen, wrong = set(), []
    for path in sorted(NEGATIVE.glob("*.c")):
        item = int(re.match(r"item(\d+)", path.stem).group(1))
        try:
            load(path.read_text(), str(path))
            wrong.append(path.stem)
        except SubsetError as ex:
            if ex.diagnostics[0].item != item:
                wrong.append(path.stem)
            seen.add(item)
    ok = seen == set(range(1, 15)) and not wrong
    report(10, ok, f"{len(seen)} of 14 items rejected with their code, wrong {wrong or 'none'}")
