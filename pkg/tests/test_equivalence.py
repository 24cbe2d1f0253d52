import copy
import dataclasses
import json

import pytest

from c2m.equivalence import (CaseError, Injection, InjectionError, build_injection,
                             check_state_equiv, check_value_equiv, compare_runs,
                             differential_run, junit_xml, json_summary, msvl_path,
                             probe_expressions, run_case)
from c2m.externs import ExternModel
from c2m.msvl_interp import MsvlSnapshot
from c2m.types import INT, PointerType
from c2m.values import UNDEF, Ptr
from c2m.xdc_interp import Snapshot

# raw-address style block numbers on both sides
XC, YC, XM, YM = 0xFFFF0000, 0xFFFF1111, 0xFFFFAAAA, 0xFFFF3333


def example_states(x_m=1):
    xs = Snapshot(vars={("global", "x"): (XC, INT), ("global", "y"): (YC, PointerType(INT))},
                  values={("global", "x"): 1, ("global", "y"): Ptr(XC, 0)})
    ms = MsvlSnapshot(vars={("global", "x"): (XM, INT), ("global", "y"): (YM, PointerType(INT))},
                      values={("global", "x"): x_m, ("global", "y"): Ptr(XM, 0)})
    return xs, ms


def test_example_layout_is_equivalent():
    xs, ms = example_states()
    alpha, survivors = build_injection(xs, ms)
    assert alpha.get(XC) == (XM, 0) and alpha.get(YC) == (YM, 0)
    assert survivors == []
    assert check_state_equiv(alpha, xs, ms).status == "equivalent"


def test_corrupted_msvl_value_is_a_mismatch_with_witness():
    xs, ms = example_states(x_m=2)
    alpha, _ = build_injection(xs, ms)
    v = check_state_equiv(alpha, xs, ms)
    assert v.status == "mismatch"
    assert v.witness == {"path": "x", "xdc": 1, "msvl": 2}


def test_missing_msvl_variable_is_an_error():
    xs, ms = example_states()
    del ms.vars[("global", "x")]
    with pytest.raises(InjectionError, match="no MSVL counterpart"):
        build_injection(xs, ms)


def test_injectivity_violation_raises():
    alpha = Injection()
    alpha.add(1, (5, 0))
    alpha.add(2, (5, 0))
    with pytest.raises(InjectionError):
        alpha.check_injective()
    with pytest.raises(InjectionError):
        alpha.add(1, (6, 0))


def test_constants_compare_by_equality():
    alpha = Injection()
    assert check_value_equiv(alpha, 1, 1)
    assert not check_value_equiv(alpha, 1, 2)
    assert not check_value_equiv(alpha, 1, 1.0)
    assert check_value_equiv(alpha, UNDEF, UNDEF)
    assert not check_value_equiv(alpha, UNDEF, 0)


def test_pointer_offset_law():
    alpha = Injection({3: (8, 4)})
    i, j = 2, 12
    assert check_value_equiv(alpha, Ptr(3, i + j), Ptr(8, i + 4 + j))
    assert not check_value_equiv(alpha, Ptr(3, i), Ptr(8, i))
    assert not check_value_equiv(alpha, Ptr(4, 0), Ptr(8, 4))
    assert not check_value_equiv(alpha, Ptr(3, 0), 0)


def test_assignment_example():
    v = differential_run("int x; int *y; int main(void){x = 1; y = &x; x = 2; return 0;}")
    assert v.status == "equivalent"
    assert v.xdc.snapshot.values[("global", "x")] == 2
    assert v.msvl.snapshot.values[("global", "x")] == 2


def test_aliasing_example():
    v = differential_run("int x; int *y; int main(void){x = 1; y = &x; *y = 2; return 0;}")
    assert v.ok
    xy = v.xdc.snapshot.values[("global", "y")]
    my = v.msvl.snapshot.values[("global", "y")]
    assert v.alpha.get(xy.block) == (my.block, 0)
    assert v.msvl.snapshot.values[("global", "x")] == 2


def test_empty_program_is_trivially_equivalent():
    v = differential_run("int main(void){return 0;}")
    assert v.status == "equivalent" and len(v.alpha) == 0


def test_increment():
    v = differential_run("int main(void){int x = 1; x++; return 0;}")
    assert v.status == "equivalent"
    assert v.xdc.snapshot.values[("main", "x")] == 2
    assert v.msvl.snapshot.values[("main", "x")] == 2


def test_infinite_loop_is_both_timeout():
    v = differential_run("int main(void){while (1) { ; } return 0;}", fuel=5_000)
    assert v.status == "both-timeout" and v.ok
    assert v.xdc.events == [] and v.msvl.events == []


def test_switch_fall_through():
    src = """int y; int main(void){int x; x = 1; y = 0;
        switch (x) { case 1: y = y + 1; case 2: y = y + 10; break; default: y = 100; }
        return y;}"""
    v = differential_run(src)
    assert v.status == "equivalent" and v.xdc.exit_code == 11


def test_timeout_on_one_side_only_is_a_verdict_mismatch():
    # the MSVL run of a longer interval is cut short by a tighter budget
    src = "int main(void){int i; i = 0; while (i < 50) { i++; } return i;}"
    a = differential_run(src, fuel=100_000)
    b = differential_run(src, fuel=60)
    v = compare_runs(a.xdc, b.msvl)
    assert v.status == "verdict-mismatch" and v.witness["msvl"] == "timeout"


def test_extern_traces_must_agree():
    src = "extern int print_int(int v); int main(void){print_int(7); return 0;}"
    v = differential_run(src, externs=ExternModel())
    assert v.ok and [str(e) for e in v.msvl.events] == ["print_int(7) -> 0"]
    bad = copy.deepcopy(v.msvl)
    bad.events[0] = dataclasses.replace(bad.events[0], args=(8,))
    assert compare_runs(v.xdc, bad).witness["path"] == "event 0"


@pytest.mark.parametrize("key", ["break", "continue", "return", "RVal", "switch"])
def test_key_variables_do_not_affect_the_verdict(key):
    v = differential_run("int g; int f(int a){return a + 1;} "
                         "int main(void){g = f(2); return g;}")
    assert v.status == "equivalent"
    mr = copy.deepcopy(v.msvl)
    for (scope, name) in list(mr.snapshot.values):
        if name == key:
            mr.snapshot.values[(scope, name)] = 12345
    assert compare_runs(v.xdc, mr).status == "equivalent"


def test_survivors_are_reported():
    xs, ms = example_states()
    ms.vars[("main", "extra")] = (99, INT)
    ms.vars[("main", "break")] = (98, INT)
    assert build_injection(xs, ms)[1] == ["main::extra"]


def test_msvl_path_renames_reserved_identifiers():
    assert msvl_path("next.more[2]") == "next_v.more_v[2]"


def test_probes_agree_on_a_small_store():
    src = """int a[3] = {1, 2, 3}; int *p; int r0; int r1; int r2;
        int main(void){p = &a[1]; r0 = *p + a[2]; r1 = a[0] < 2; r2 = 7 / (a[0] - 1); return 0;}"""
    probes = probe_expressions(src)
    assert [p.agree for p in probes] == [True, True, True]
    assert (probes[0].xdc, probes[1].xdc) == (5, 1)
    # division by zero faults on both sides
    assert "fault" in repr(probes[2].xdc)


# case directories
def test_case_with_expected_snapshot(tmp_case):
    d = tmp_case("int x; int main(void){x = 3; return x;}",
                 verdict=json.dumps({"status": "equivalent", "exit_code": 3,
                                     "snapshot": {"x": 3}}))
    r = run_case(d)
    assert r.ok, r.message


def test_corrupted_expected_snapshot_fails_with_witness(tmp_case):
    d = tmp_case("int x; int main(void){x = 3; return x;}",
                 verdict=json.dumps({"status": "equivalent", "snapshot": {"x": 4}}))
    r = run_case(d)
    assert not r.ok
    assert r.verdict.status == "mismatch"
    assert r.verdict.witness == {"path": "x", "expected": 4, "actual": 3}


def test_missing_externs_is_a_case_error(tmp_case):
    d = tmp_case("int main(void){return 0;}", externs=None)
    with pytest.raises(CaseError, match="externs.json"):
        run_case(d)


def test_rejected_case(tmp_case):
    d = tmp_case("union u {int a;}; int main(void){return 0;}",
                 verdict=json.dumps({"status": "rejected"}))
    assert run_case(d).ok


def test_reports(tmp_case):
    good = run_case(tmp_case("int main(void){return 0;}", name="good"))
    bad = run_case(tmp_case("int x; int main(void){x = 1; return 0;}", name="bad",
                            verdict=json.dumps({"snapshot": {"x": 2}})))
    xml = junit_xml([good, bad])
    assert 'tests="2"' in xml and 'failures="1"' in xml and "<failure" in xml
    summary = json.loads(json_summary([good, bad]))
    assert (summary["passed"], summary["failed"]) == (1, 1)
