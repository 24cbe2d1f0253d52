import json

import pytest

from c2m.diagnostics import RuntimeFault
from c2m.externs import ExternModel
from c2m.msvl import ast as M
from c2m.msvl import parse_msvl
from c2m.msvl.parser import parse_mexpr, parse_mstmt
from c2m.msvl_interp import EMPTY, Machine, Next, dump_interval, run_msvl
from c2m.values import Ptr

DECLS = """struct pt {int x and int y};
int a[3][4] and skip;
int v[5] <== {10, 11, 12, 13, 14} and skip;
struct pt q and skip;
struct pt *qp <== &q and skip;
int x <== 7 and skip;
int *px <== &x and skip;
"""


def machine(decls=DECLS, **kw):
    """Machine positioned after the declarations, with no history beyond them."""
    m = Machine(parse_msvl(decls + "empty"), **kw)
    m.drive(m.globals_stmt())
    m.rules.clear()
    return m


def loc(m, name):
    return m.globals.env[name][0]


def run(text, fuel=10_000, externs=None, record=True):
    return run_msvl(parse_msvl(text), fuel, externs, record=record, require_exit=False)


def values(res, name):
    """Value of name in each recorded state. A program made only of
    declarations keeps them in the top-level frame."""
    return [s["values"].get(name, s["values"].get("main::" + name))
            for s in res.interval.states]


# left values
def test_L1_variable():
    m = machine()
    assert m.eval_left(parse_mexpr("x"))[:2] == (loc(m, "x"), 0)


def test_L2_array_element():
    m = machine()
    assert m.eval_left(parse_mexpr("v[3]"))[:2] == (loc(m, "v"), 12)
    assert m.rules["L2"] == 1


def test_L3_two_dimensional_element():
    m = machine()
    # (1 * 4 + 2) * sizeof(int)
    assert m.eval_left(parse_mexpr("a[1][2]"))[:2] == (loc(m, "a"), 24)
    assert m.rules["L3"] == 1


@pytest.mark.parametrize("i,j", [(0, 0), (0, 3), (1, 0), (2, 3), (2, 1)])
def test_L3_matches_row_major_arithmetic(i, j):
    m = machine()
    assert m.eval_left(parse_mexpr(f"a[{i}][{j}]"))[1] == (i * 4 + j) * 4


def test_L4_member():
    m = machine()
    assert m.eval_left(parse_mexpr("q.y"))[:2] == (loc(m, "q"), 4)
    assert m.rules["L4"] == 1


def test_L5_arrow():
    m = machine()
    assert m.eval_left(parse_mexpr("qp->y"))[:2] == (loc(m, "q"), 4)
    assert m.rules["L5"] == 1


def test_L6_dereference():
    m = machine()
    assert m.eval_left(parse_mexpr("*px"))[:2] == (loc(m, "x"), 0)
    assert m.rules["L6"] == 1


def test_unbound_variable():
    with pytest.raises(RuntimeFault, match="unbound"):
        machine().eval_left(parse_mexpr("nosuch"))


def test_unknown_field():
    with pytest.raises(RuntimeFault, match="field_offset"):
        machine().eval_left(parse_mexpr("q.z"))


# right values
@pytest.mark.parametrize("text,value,rule", [
    ("3", 3, "R1"),
    ("x", 7, "R2"),
    ("(float)x", 7.0, "R4"),
    ("-x", -7, "R5"),
    ("~0", -1, "R5"),
    ("x * 2 + 1", 15, "R6"),
    ("if(1 < 2) then 2 else 3", 2, "R7"),
    ("if(x = 0) then 2 else 3", 3, "R8"),
    ("v[4] - v[0]", 4, "R6"),
])
def test_right_values(text, value, rule):
    m = machine()
    assert m.eval_right(parse_mexpr(text))[0] == value
    assert m.rules[rule] >= 1


def test_R3_address_of():
    m = machine()
    assert m.eval_right(parse_mexpr("&v[2]"))[0] == Ptr(loc(m, "v"), 8)
    assert m.rules["R3"] == 1


def test_R9_previous_value():
    res = run("int x <== 7 and skip;\nx:=1;\nx:=prev(x) + 10")
    assert res.status == "terminates"
    # the right side is evaluated in s2, where prev(x) is the value in s1
    assert values(res, "x") == [7, 7, 1, 17]
    assert res.rules["R9"] == 1


def test_R9_depth_two():
    res = run("int x <== 1 and skip;\nx:=2;\nx:=3;\nx:=prev(prev(x)) * 100")
    # evaluated in s3; two states back is s1
    assert values(res, "x") == [1, 1, 2, 3, 100]


def test_R9_rejects_depth_beyond_history():
    m = Machine(parse_msvl("int x <== 1 and skip;\nempty"))
    m.drive(m.globals_stmt())
    m.i = 0
    with pytest.raises(RuntimeFault, match="exceeds"):
        m.eval_right(M.MPrev(1, M.MVar("x")))


# booleans
@pytest.mark.parametrize("text,value,rule", [
    ("true", True, "B1"),
    ("false", False, "B2"),
    ("1 < 2", True, "B3"),
    ("x != 7", False, "B3"),
    ("!(true)", False, "B4"),
    ("x = 7 and x > 8", False, "B5"),
    ("x = 7 or x > 8", True, "B6"),
])
def test_booleans(text, value, rule):
    m = machine()
    assert m.eval_bool(parse_mexpr(text)) is value
    assert m.rules[rule] >= 1


def test_conjunction_is_not_short_circuit():
    with pytest.raises(RuntimeFault, match="division by zero"):
        machine().eval_bool(parse_mexpr("false and 1 / 0 > 0"))


def test_disjunction_is_not_short_circuit():
    with pytest.raises(RuntimeFault, match="division by zero"):
        machine().eval_bool(parse_mexpr("true or 1 / 0 > 0"))


# framed program rules
def test_SKIP():
    m = machine()
    nf = m.reduce_in_state(M.MSkip())
    assert nf.kind == "next" and nf.body == M.MEmpty() and m.rules["SKIP"] == 1


def test_UASS_postpones_the_write():
    m = machine()
    nf = m.reduce_in_state(parse_mstmt("x:=x + 1"))
    assert nf.kind == "next" and m.rules["UASS"] == 1
    assert m.eval_right(parse_mexpr("x"))[0] == 7


def test_unit_assignment_interval_has_length_two():
    res = run("int x and x:=5")
    assert res.interval.length == 2
    assert values(res, "x") == ["Undef", 5]


@pytest.mark.parametrize("ra", ["5", "x + 1", "if(x > 0) then 1 else 2", "v[1] * 2"])
def test_unit_assignment_length_contract(ra):
    m = machine()
    before = m.interval.length
    m.drive(parse_mstmt(f"x:={ra}"))
    assert m.interval.length - before == 2


def test_AND_combines_both_sides():
    res = run("int x <== 0 and skip;\nint y <== 0 and skip;\nx:=1 and y:=2")
    assert res.rules["AND"] >= 1 and values(res, "x")[-1] == 1 and values(res, "y")[-1] == 2


def test_NEXT():
    res = run("int x <== 0 and skip;\nnext {x <== 4 and empty}")
    assert res.rules["NEXT"] == 1 and values(res, "x")[-2:] == [0, 4]


def test_ALW1_when_the_interval_ends():
    m = machine()
    assert m.reduce_in_state(parse_mstmt("always {x <== 7} and empty")) is EMPTY
    assert m.rules["ALW1"] == 1


def test_ALW2_when_the_interval_goes_on():
    res = run("int x <== 0 and skip;\nint y and skip;\n{x:=1; x:=2} and always {y <== x + 1}")
    assert res.status == "terminates"
    assert res.rules["ALW2"] == 2 and res.rules["ALW1"] == 1
    assert values(res, "y")[-3:] == [1, 2, 3]


def test_CHOP1_state_formula_then_rest():
    res = run("int x <== 0 and skip;\n{x <== 0 and true};\nx:=2")
    assert res.rules["CHOP1"] >= 1 and res.rules["T1"] >= 1 and values(res, "x")[-1] == 2


def test_CHOP2_next_then_rest():
    m = machine()
    nf = m.reduce_in_state(parse_mstmt("skip; x:=1"))
    assert nf.kind == "next" and isinstance(nf.body, M.MChop) and m.rules["CHOP2"] == 1


def test_CHOP3_empty_then_rest():
    m = machine()
    nf = m.reduce_in_state(parse_mstmt("empty; x:=1"))
    assert nf.kind == "next" and m.rules["CHOP3"] == 1


def test_CHOP4_always_more_absorbs_the_rest():
    res = run("int x <== 0 and skip;\nalways {more}; x:=1", fuel=300)
    assert res.status == "timeout" and res.rules["CHOP4"] == 1
    assert set(values(res, "x")) == {0}


def test_IF_chooses_an_arm():
    m = machine()
    nf = m.reduce_in_state(parse_mstmt("if(x = 7)then{empty}else{skip}"))
    assert nf is EMPTY and m.rules["IF"] == 1


def test_WHL_false_reduces_to_empty():
    m = machine()
    assert m.reduce_in_state(parse_mstmt("while(x < 0){x:=x + 1}")) is EMPTY
    assert m.rules["WHL"] == 1


def test_WHL_unrolls():
    res = run("int i <== 0 and skip;\nwhile(i < 3){i:=i + 1}")
    assert values(res, "i")[-1] == 3 and res.rules["WHL"] == 4


# truth values
def test_F1_false_conjunct():
    res = run("int x <== 0 and skip;\nx:=1 and false")
    assert res.status == "infeasible" and res.rules["F1"] >= 1


def test_F3_contradictory_assignments():
    res = run("int x <== 0 and skip;\nx <== 1 and x <== 2")
    assert res.status == "infeasible" and res.rules["F3"] == 1


def test_T1_true_conjunct_vanishes():
    res = run("int x <== 0 and skip;\nx:=1 and true")
    assert res.status == "terminates" and res.rules["T1"] == 1 and res.interval.length == 3


def test_if_uses_the_disjunction_rules():
    res = run("int x <== 0 and skip;\nif(x = 0)then{x:=1}else{x:=2}")
    for r in ("T1", "T3", "F1", "F2"):
        assert res.rules[r] >= 1, r


def test_empty_and_next_is_infeasible():
    res = run("int x <== 0 and skip;\nempty and skip")
    assert res.status == "infeasible"


# minimal model
def test_MIN1_present_assignment():
    m = machine()
    m.reduce_in_state(parse_mstmt("x <== 9"))
    assert m.eval_right(parse_mexpr("x"))[0] == 9 and m.rules["MIN1"] >= 1


def test_MIN2_framing_keeps_previous_value():
    res = run("int x<==1 and skip;\nint y <== 5 and skip;\nx:=y + 1;\nx:=y + 2")
    assert res.status == "terminates" and values(res, "y")[-3:] == [5, 5, 5]
    assert values(res, "x")[-1] == 7
    assert res.rules["MIN2"] >= 1


def test_declaration_then_skip_frames():
    res = run("int x<==1 and skip")
    assert res.interval.length == 2 and values(res, "x") == [1, 1]


def test_read_then_conflicting_assignment_is_infeasible():
    res = run("int x <== 1 and skip;\nint y and skip;\ny <== x and x <== 2")
    assert res.status == "infeasible"


# transitions
def test_TR1():
    m = machine()
    n, i = m.interval.length, m.i
    assert m.transition(Next(M.MEmpty())) == M.MEmpty()
    assert (m.interval.length, m.i) == (n + 1, i + 1) and m.rules["TR1"] >= 1


def test_TR2():
    m = machine()
    n = m.interval.length
    assert m.transition(EMPTY) is True
    assert m.interval.length == n + 1


def test_final_configuration_shape():
    res = run("int x <== 0 and skip;\nx:=1;\nx:=2")
    c = res.final
    assert c.program is True and c.state is None
    assert c.i == c.sigma.length + 1 == res.interval.length + 1
    assert c.is_final


def test_empty_program_has_one_state():
    res = run("empty")
    assert res.interval.length == 1 and res.final.is_final


# calls
FUN = """int g <== 0 and skip;
function f(int a){
    g:=a
};
"""


def test_FUN_internal_call():
    res = run(FUN + "f(3)")
    assert res.status == "terminates" and res.rules["FUN"] == 1
    assert values(res, "g")[-1] == 3
    # callee locals are released by the trailing mfree state
    assert not any(k.startswith("f::") for k in res.interval.states[-1]["values"])


def test_FUN_with_return_value():
    text = """int r <== 0 and skip;
function f(int a, int RVal){
    return:=1 and RVal:=a
};
r:=ext f(3, RVal)"""
    res = run(text)
    assert res.rules["R10"] == 1 and values(res, "r")[-1] == 3


def test_EXT1_user_function_runs_on_a_side_interval():
    res = run(FUN + "ext f(4) and skip")
    assert res.rules["EXT1"] == 1 and values(res, "g")[-1] == 4
    # the callee's own states are not part of the caller's interval
    assert res.interval.length == 3


def test_EXT2_single_state_extern():
    res = run("int x <== 0 and skip;\next print_int(x) and skip")
    assert res.rules["EXT2"] == 1
    assert [str(e) for e in res.events] == ["print_int(0) -> 0"]


def test_EXT3_extern_with_a_model_interval():
    res = run("int x <== 0 and skip;\next tick(1) and skip",
              externs=ExternModel({"tick": {"steps": 2}}))
    assert res.rules["EXT3"] == 1 and res.status == "terminates"


def test_R11_extern_value():
    res = run("int x <== 0 and skip;\nx:=ext read_int()",
              externs=ExternModel({"read_int": {"returns": [5]}}))
    assert res.rules["R11"] == 1 and values(res, "x")[-1] == 5


def test_unknown_extern():
    res = run("ext nosuch(1) and skip")
    assert res.status == "error" and "unknown extern" in res.error


# runs
def test_timeout():
    res = run("int x <== 0 and skip;\nwhile(true){x:=x + 1}", fuel=500)
    assert res.status == "timeout"


def test_dump_interval_is_json_lines():
    res = run("int x <== 0 and skip;\nx:=1")
    lines = dump_interval(res.interval).splitlines()
    assert len(lines) == res.interval.length
    assert json.loads(lines[-1])["values"]["x"] == 1
