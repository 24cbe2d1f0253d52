import pytest

from c2m.diagnostics import ParseError
from c2m.msvl import ast as M
from c2m.msvl import count_nodes, emit, parse_msvl
from c2m.msvl.emit import Style, expr, stmt
from c2m.msvl.parser import parse_mexpr, parse_mstmt
from c2m.stats import translate_timed

from conftest import CASES, GOLDEN
from tokmatch import toks

# frozen once from the golden program
MTF_NODES = 648


def one(n):
    return M.MConst(n, str(n))


def test_unit_assignment_text():
    assert stmt(M.MUnitAssign(M.MVar("i"), one(0))) == "i:=0"


def test_declaration_with_skip():
    assert stmt(parse_mstmt("unsigned char yy[256] and skip")) == "unsigned char yy[256] and skip"


def test_empty_text():
    assert stmt(M.MEmpty()) == "empty"


def test_present_assignment_ascii():
    assert stmt(M.MAssign(M.MVar("x"), one(1))) == "x <== 1"


def test_parse_chop():
    assert parse_mstmt("x:=1;y:=2") == M.MChop(M.MUnitAssign(M.MVar("x"), one(1)),
                                               M.MUnitAssign(M.MVar("y"), one(2)))


def test_parse_if():
    assert parse_mstmt("if(b)then{empty}else{skip}") == M.MIf(M.MVar("b"), M.MEmpty(), M.MSkip())


def test_parse_prev_and_ext_call():
    e = parse_mexpr("prev(x) + ext f(1, RVal)")
    assert isinstance(e.left, M.MPrev) and e.left.expr == M.MVar("x")
    assert isinstance(e.right, M.MExtCallExpr) and e.right.rval


def test_temporal_forms_round_trip():
    text = "always x <== 1 and more;\ntrue and next false"
    assert stmt(parse_mstmt(text)) == text


def test_struct_members_joined_by_and():
    p = parse_msvl("struct S {int x and int y};\nempty")
    assert isinstance(p.decls[0], M.MStruct)
    assert emit(p).startswith("struct S {int x and int y};")


def test_rval_is_last_parameter():
    p = parse_msvl("function f(int a, int RVal){\n    return:=1 and RVal:=a\n};\nempty")
    f = p.functions[0]
    assert [q.name for q in f.params] == ["a"] and f.rval_type is not None


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as ei:
        parse_mstmt("x := ;")
    assert ei.value.span.line == 1


def test_count_nodes_small():
    assert count_nodes(M.MEmpty()) == 1
    assert count_nodes(M.MChop(M.MEmpty(), M.MEmpty())) == 3


def test_count_nodes_golden_is_frozen():
    assert count_nodes(parse_msvl((GOLDEN / "mtf.m").read_text())) == MTF_NODES


def test_golden_reparses_to_equal_ast():
    text = (GOLDEN / "mtf.m").read_text()
    p = parse_msvl(text)
    assert emit(p) == text
    assert parse_msvl(emit(p)) == p


@pytest.mark.parametrize("case", sorted(CASES.glob("*/input.c")), ids=lambda p: p.parent.name)
def test_emit_parse_emit_is_a_fixpoint(case):
    text = translate_timed(case.read_text())[0]
    assert emit(parse_msvl(text)) == text
    assert not {"==", "goto", "&&", "||"} & set(toks(text))


def test_inline_layout_also_round_trips():
    text = translate_timed((GOLDEN / "mtf.c").read_text())[0]
    inline = emit(parse_msvl(text), Style(inline_bodies=True))
    assert len(inline.splitlines()) < len(text.splitlines())
    assert parse_msvl(inline) == parse_msvl(text)


@pytest.mark.parametrize("src", [
    "(a + b) * c", "a - (b - c)", "a - b - c", "a / (b * c)", "-(a + b)",
    "a << (b + 1)", "(a = b) = c", "a and (b or c)", "!(a < b)", "*(p + 1)",
    "(if(a)then b else c) + 1", "&a[2]", "(float)(a + b)", "p->nx->x",
])
def test_parenthesisation_preserves_the_tree(src):
    e = parse_mexpr(src)
    assert parse_mexpr(expr(e)) == e
