import pytest

from c2m.equivalence import snapshot_view
from c2m.externs import ExternModel
from c2m.optype import OpTypeError, binop_type
from c2m.types import INT, FloatType, IntType, PointerType
from c2m.xdc import ast as A
from c2m.xdc import load
from c2m.xdc_interp import Interpreter, run_program

from conftest import GOLDEN

FLOAT, DOUBLE = FloatType("float"), FloatType("double")


def run(src, fuel=100_000, externs=None):
    prog, info = load(src)
    return run_program(prog, info, fuel, externs)


def view(src, **kw):
    r = run(src, **kw)
    assert r.status == "terminates", r.error
    return snapshot_view(r.snapshot)


def machine(decls):
    """Interpreter with the globals of decls allocated and initialised."""
    prog, info = load(decls + "\nint main(void){return 0;}")
    xi = Interpreter(prog, info)
    xi.setup()
    return xi, info


# binary addition, one test per row
def test_add_int_int():
    assert run("int main(void){int a; a = 2147483647; return a + 1;}").exit_code == -2**31


def test_add_float_float():
    v = view("float f; int main(void){f = 0.1f; f = f + 0.2f; return 0;}")
    # rounded to single precision after the add
    assert v["f"] == 0.30000001192092896


def test_add_double_double():
    v = view("double d; int main(void){d = 0.1; d = d + 0.2; return 0;}")
    assert v["d"] == 0.1 + 0.2


def _ptr_result(src):
    r = run(src)
    b = r.snapshot.vars[("global", "a")][0]
    return r.snapshot.values[("global", "p")], b


def test_add_pointer_int():
    p, b = _ptr_result("int a[4]; int *p; int main(void){p = &a[1]; p = p + 2; return 0;}")
    assert (p.block, p.offset) == (b, 12)


def test_add_int_pointer():
    p, b = _ptr_result("int a[4]; int *p; int main(void){p = &a[0]; p = 3 + p; return 0;}")
    assert (p.block, p.offset) == (b, 12)


@pytest.mark.parametrize("lt,rt", [
    (FLOAT, DOUBLE), (INT, DOUBLE), (PointerType(INT), PointerType(INT)),
    (IntType("char"), INT),
])
def test_add_otherwise_undefined(lt, rt):
    with pytest.raises(OpTypeError):
        binop_type("+", lt, rt)


def test_mixed_float_double_program_is_rejected():
    from c2m.diagnostics import TypeCheckError
    with pytest.raises(TypeCheckError):
        load("float f; double d; int main(void){d = f + d; return 0;}")


# left values
def test_lvalue_variable():
    xi, _ = machine("int x;")
    b, off, _ = xi.lvalue(A.Var("x"), {})
    assert off == 0 and b == xi.globals["x"][0]
    assert xi.rules["C1"] == 1


def test_lvalue_array_element_offset():
    prog, info = load("int a[4]; int main(void){a[2] = 1; return a[2];}")
    xi = Interpreter(prog, info)
    xi.setup()
    target = A.flatten(prog.main.body)[0].target
    b, off, _ = xi.lvalue(target, {})
    assert (b, off) == (xi.globals["a"][0], 8)


def test_lvalue_field_offset():
    prog, info = load("struct s {int f1; int f2;}; struct s v; "
                      "int main(void){v.f2 = 1; return v.f2;}")
    xi = Interpreter(prog, info)
    xi.setup()
    target = A.flatten(prog.main.body)[0].target
    assert xi.lvalue(target, {})[1] == 4


def test_local_shadows_global():
    assert run("int x = 1; int f(void){int x; x = 7; return x;} "
               "int main(void){int y; y = f(); return x * 10 + y;}").exit_code == 17


# right values
def test_conditional_expression_example():
    assert run("int main(void){int x; x = 1; return (x > 0) ? 2 : 3;}").exit_code == 2


def test_truth_is_nonzero():
    assert run("int main(void){int x; x = -5; if (x) return 1; return 0;}").exit_code == 1


def test_division_truncates_toward_zero():
    v = view("int q; int r; int main(void){q = -7 / 2; r = -7 % 2; return 0;}")
    assert (v["q"], v["r"]) == (-3, -1)


def test_unsigned_char_wraps():
    assert run("unsigned char c; int main(void){c = 255; c = c + 1; return (int) c;}").exit_code == 0


def test_logical_operators_evaluate_both_sides():
    r = run("int a[2]; int main(void){int i; i = 5; return i < 2 && a[i] == 0;}")
    assert r.status == "error"


def test_uninitialised_read_is_an_error():
    r = run("int main(void){int x; return x;}")
    assert r.status == "error" and "uninitialised" in r.error


def test_out_of_bounds_is_an_error():
    r = run("int a[2]; int main(void){a[2] = 1; return 0;}")
    assert r.status == "error" and "out-of-bounds" in r.error


def test_impure_call_in_expression_is_an_error():
    r = run("int g = 0; int f(void){g = 1; return 2;} int main(void){int x; x = f(); return x;}")
    assert r.status == "error" and "changed memory" in r.error


# statements
def test_break_outcome():
    r = run("int main(void){int x; x = 0; while (1) { x++; break; } return x;}")
    assert r.exit_code == 1 and r.rules["T2"] == 1 and r.rules["T12"] == 1


def test_false_while_is_normal():
    r = run("int main(void){while (0) { ; } return 3;}")
    assert r.exit_code == 3 and r.rules["T11"] == 1


def test_assignment_then_load():
    assert view("int x; int main(void){x = 5; return 0;}")["x"] == 5


def test_sequence_rules():
    r = run("int main(void){int x; x = 1; return x; x = 2;}")
    assert r.exit_code == 1 and r.rules["T7"] >= 1 and r.rules["T8"] == 1


def test_switch_fall_through_and_default():
    src = """int main(void){int x; int y; x = %d; y = 0;
        switch (x) { case 1: y = y + 1; case 2: y = y + 10; break; default: y = 100; }
        return y;}"""
    assert run(src % 1).exit_code == 11
    assert run(src % 2).exit_code == 10
    r = run(src % 7)
    assert r.exit_code == 100 and r.rules["T23"] == 1


def test_continue_in_for_runs_step():
    r = run("int main(void){int i; int s; s = 0;"
            "for (i = 0; i < 5; i++) { if (i == 2) continue; s = s + i; } return s;}")
    assert r.exit_code == 8 and r.rules["T3"] == 1


def test_return_without_value_from_void_function():
    assert run("int g; void f(void){g = 4; return;} int main(void){f(); return g;}").exit_code == 4


# calls
def test_defined_function_value():
    assert run("int id5(void){return 5;} int main(void){int x; x = id5(); return x;}").exit_code == 5


def test_factorial():
    src = "int fact(int n){if (n <= 1) return 1; return n * fact(n - 1);} " \
          "int main(void){int r; r = fact(5); return r;}"
    r = run(src)
    # five activations of fact plus main
    assert r.exit_code == 120 and r.rules["T25"] == 6


def test_extern_call_records_event():
    model = ExternModel({"read_int": {"returns": [42]}})
    r = run("extern int read_int(void); int main(void){int x; x = read_int(); return x;}",
            externs=model)
    assert r.exit_code == 42 and r.rules["T26"] == 1
    assert [str(e) for e in r.events] == ["read_int() -> 42"]


def test_non_void_function_falling_off_the_end_is_an_error():
    r = run("int f(void){;} int main(void){int x; x = f(); return x;}")
    assert r.status == "error"


# programs
def test_return_zero():
    r = run("int main(void){return 0;}")
    assert (r.status, r.exit_code, r.events) == ("terminates", 0, [])


def test_infinite_loop_times_out():
    r = run("int main(void){while (1) { ; } return 0;}", fuel=10_000)
    assert r.status == "timeout"


def test_mtf_snapshot():
    v = view((GOLDEN / "mtf.c").read_text())
    assert v["nMTF"] == 5
    assert [v[f"mtfv[{k}]"] for k in range(5)] == [3, 2, 3, 2, 4]
    assert [v[f"mtfFreq[{k}]"] for k in range(5)] == [0, 0, 2, 2, 1]
    assert v["mtfFreq[5]"] == "Undef"


def test_every_statement_rule_has_a_counter():
    src = (GOLDEN / "mtf.c").read_text()
    r = run(src)
    for rule in ("T6", "T7", "T9", "T10", "T13", "T15", "T17", "T25"):
        assert r.rules[rule] > 0, rule
