import pytest

from c2m.msvl import emit
from c2m.msvl.emit import Style, expr, stmt
from c2m.translator import TranslateOptions, mname, prgm_tr, translate_expr, translate_stmt
from c2m.xdc import load
from c2m.xdc.parser import parse_expr, parse_stmt

INLINE = Style(inline_bodies=True)


def prog(src):
    p, info = load(src)
    return emit(prgm_tr(p, info))


def st(src, **opts):
    return stmt(translate_stmt(parse_stmt(src), TranslateOptions(**opts)), 0, INLINE)


def ex(src):
    return expr(translate_expr(parse_expr(src)))


MAIN = "int main(void){ ; return 0; }"


def test_global_declaration():
    assert prog("int i; " + MAIN).splitlines()[0] == "int i and skip;"


def test_null_body_is_empty():
    assert prog(MAIN).splitlines()[0] == "empty;"


def test_sized_array_initializer():
    assert "int a[3] <== {1, 2, 3} and skip;" in prog("int a[3]={1,2,3}; " + MAIN)


def test_unsized_array_takes_its_extent_from_the_list():
    assert "int a[2] <== {1, 2} and skip;" in prog("int a[]={1,2}; " + MAIN)


def test_struct_members_joined_by_and():
    assert "struct S {int x and int y};" in prog("struct S {int x; int y;}; " + MAIN)


def test_function_gets_rval_parameter():
    out = prog("int f(int a){return a;} int main(void){int r; r = f(3); return r;}")
    assert "function f(int a, int RVal){\n    return:=1 and RVal:=a\n};" in out
    assert "r:=ext f(3, RVal);" in out


def test_void_function_has_no_rval():
    out = prog("int g; void f(int a){g = a;} int main(void){f(1); return g;}")
    assert "function f(int a){" in out and "\nf(1);" in out


def test_extern_call_statement():
    out = prog("extern void printf(int s); int main(void){printf(3); return 0;}")
    assert "ext printf(3) and skip;" in out


@pytest.mark.parametrize("src,out", [
    ("j == 0", "j = 0"),
    ("a?b:c", "if(a)then b else c"),
    ("a && b || !c", "a and b or !c"),
    ("x != y", "x != y"),
    ("(a + b) * c", "(a + b) * c"),
    ("p->x", "p->x"),
    ("*&a[1]", "*(&a[1])"),
])
def test_expressions(src, out):
    assert ex(src) == out


@pytest.mark.parametrize("src,out", [
    ("break;", "break:=1"),
    ("continue;", "continue:=1"),
    ("le--;", "le:=le - 1"),
    ("le++;", "le:=le + 1"),
    ("x = 1;", "x:=1"),
    (";", "empty"),
    ("return;", "return:=1"),
    ("return x + 1;", "return:=1 and RVal:=x + 1"),
])
def test_elementary_statements(src, out):
    assert st(src) == out


def test_plain_chop_when_no_jumps():
    assert st("{ x = 1; y = 2; }") == "x:=1;\ny:=2"


def test_chop_guards_after_break():
    assert st("{ if (x) break; y = 1; }") == \
        "if(x)then{break:=1}else{empty};\nif(break = 0)then{y:=1}else{empty}"


def test_chop_guards_after_return():
    assert st("{ return 1; y = 2; }") == \
        "return:=1 and RVal:=1;\nif(return = 0)then{y:=2}else{empty}"


def test_plain_while():
    assert st("while (i < 3) { i++; }") == "while(i < 3){i:=i + 1}"


def test_while_with_break_resets_flag():
    out = st("while (i < 3) { if (i == 1) break; i++; }")
    assert out.startswith("while(break = 0 and i < 3){")
    assert out.endswith("};\nbreak:=0")


def test_guard_order_option():
    out = st("while (i < 3) { if (i == 1) break; i++; }", guard_first=False)
    assert out.startswith("while(i < 3 and break = 0){")


def test_do_while_runs_body_first():
    assert st("do { i++; } while (i < 3);") == "i:=i + 1;\nwhile(i < 3){i:=i + 1}"


def test_for_continue_still_runs_step():
    out = st("for (i = 0; i < 3; i++) { if (i == 1) continue; s = s + i; }")
    assert out.splitlines()[0] == "i:=0;"
    assert out.splitlines()[-3:] == ["    i:=i + 1;", "    continue:=0", "}"]


def test_switch_fallthrough_shape():
    out = st("switch (x) { case 1: y = 1; case 2: y = 2; break; default: y = 3; }")
    lines = out.splitlines()
    assert lines[0] == "break:=0;" and lines[1] == "switch:=0;"
    assert lines[-1] == "break:=0"
    assert "(x = 1 or switch = 1) and break = 0 and return = 0" in out
    assert "(x = 2 or switch = 1) and break = 0 and return = 0" in out


def test_identifier_map_is_injective():
    names = ["next", "next_v", "next_v_v", "x", "x_v", "RVal", "more", "always", "ext"]
    assert len({mname(n) for n in names}) == len(names)
    assert mname("x") == "x" and mname("next") == "next_v"


def test_reserved_names_are_renamed_in_output():
    out = prog("int next; int main(void){ next = 1; return next; }")
    assert "int next_v and skip;" in out and "next_v:=1" in out


def test_translation_is_deterministic():
    src = "int a[4]; int main(void){int i; for (i = 0; i < 4; i++) a[i] = i; return a[3];}"
    assert prog(src) == prog(src)
