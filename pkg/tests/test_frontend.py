import pytest

from c2m.diagnostics import LexError, ParseError, SubsetError, TypeCheckError
from c2m.types import IntType
from c2m.xdc import ast as A
from c2m.xdc import check_subset, load, parse_program, tokenize
from c2m.xdc.parser import parse_expr, parse_stmt
from c2m.xdc.printer import print_program

from conftest import CASES, GOLDEN, NEGATIVE


def kinds(src):
    return [(t.kind, t.text) for t in tokenize(src) if t.kind != "eof"]


def test_tokenize_postfix_increment():
    assert kinds("le++;") == [("ident", "le"), ("punct", "++"), ("punct", ";")]


def test_tokenize_equality():
    assert kinds("x == 1") == [("ident", "x"), ("punct", "=="), ("int", "1")]


def test_tokens_carry_positions():
    t = tokenize("int x;\n  y = 2;")
    assert (t[3].text, t[3].line, t[3].col) == ("y", 2, 3)


def test_comments_are_dropped():
    assert kinds("a /* b */ + // c\n d") == [("ident", "a"), ("punct", "+"), ("ident", "d")]


def test_illegal_byte_is_a_lex_error():
    with pytest.raises(LexError) as ei:
        tokenize("\x01")
    assert str(ei.value.span) == "1:1"


def test_declaration_with_initializer():
    prog = parse_program("int i=0; int main(void){return i;}")
    d = prog.decls[0]
    assert isinstance(d, A.VarDecl)
    assert [(it.name, it.init) for it in d.items] == [("i", A.Const(0))]


def test_conditional_expression():
    assert parse_expr("e1?e2:e3") == A.Cond(A.Var("e1"), A.Var("e2"), A.Var("e3"))


def test_two_dimensional_index():
    assert parse_expr("a[i][j]") == A.Index2("a", A.Var("i"), A.Var("j"))


def test_c_precedence():
    e = parse_expr("a + b * c == d && e")
    assert isinstance(e, A.Binop) and e.op == "&&"
    assert e.left.op == "==" and e.left.left.op == "+" and e.left.left.right.op == "*"


def test_switch_without_default_is_a_syntax_error():
    with pytest.raises(ParseError, match="default"):
        load("int main(void){int x; x = 1; switch(x){case 1: ;} return 0;}")


def test_pointer_relational_is_rejected():
    src = "int a; int *p; int *q; int main(void){int z; p=&a; q=&a; z = p < q; return 0;}"
    with pytest.raises(TypeCheckError, match="pointer"):
        load(src)


def test_cast_from_double_to_int():
    prog, _ = load("int main(void){double x; int y; x = 1.5; y = (int)x; return y;}")
    y = A.flatten(prog.main.body)[1]
    assert y.value.ctype == IntType("int")


def test_unknown_field():
    with pytest.raises(TypeCheckError, match="field_offset"):
        load("struct s {int a;}; struct s v; int main(void){int z; z = v.b; return 0;}")


def test_packed_field_offsets():
    _, info = load("struct s {char c; int a; short h;}; struct s v; int main(void){return 0;}")
    assert [info.structs.field_offset("s", f)[0] for f in "cah"] == [0, 1, 5]


def test_mixed_width_arithmetic_needs_a_cast():
    with pytest.raises(TypeCheckError):
        load("int main(void){char c; int i; c = 'a'; i = c + 1000000 + i; return 0;}")


def test_literal_adapts_to_operand():
    load("int main(void){char c; c = 'a'; c = c + 1; return 0;}")


def test_empty_file_has_no_main():
    with pytest.raises(ParseError, match="no main"):
        load("")


def test_preprocessor_lines_are_rejected():
    with pytest.raises(ParseError):
        load("#include <stdio.h>\nint main(void){return 0;}")


@pytest.mark.parametrize("path", sorted(NEGATIVE.glob("*.c")), ids=lambda p: p.stem)
def test_negative_fixture_reports_its_item(path):
    item = int(path.stem[4:6])
    with pytest.raises(SubsetError) as ei:
        load(path.read_text(), str(path))
    assert ei.value.diagnostics[0].item == item
    assert f"[item-{item}]" in ei.value.diagnostics[0].format()


def test_goto_and_chained_assignment_items():
    prog = parse_program("int main(void){int x; int y; x = y = 1; goto L; L: return 0;}")
    assert {d.item for d in check_subset(prog)} == {1, 7}


def test_mtf_fragment_is_in_the_subset():
    prog = parse_program((GOLDEN / "mtf.c").read_text())
    assert check_subset(prog) == []


def test_every_diagnostic_has_a_span():
    for path in NEGATIVE.glob("*.c"):
        with pytest.raises(SubsetError) as ei:
            load(path.read_text())
        assert all(d.span.line > 0 for d in ei.value.diagnostics)


def _all_sources():
    yield from sorted(GOLDEN.glob("*.c"))
    yield from sorted(CASES.glob("*/input.c"))


@pytest.mark.parametrize("path", list(_all_sources()), ids=lambda p: p.parent.name + "/" + p.stem)
def test_print_then_parse_round_trip(path):
    prog = parse_program(path.read_text())
    again = parse_program(print_program(prog))
    assert again == prog


def test_typed_ast_is_total():
    prog, _ = load((GOLDEN / "mtf.c").read_text())
    for n in A.walk(prog):
        if isinstance(n, A.Expr) and not isinstance(n, A.InitList):
            assert n.ctype is not None, n


def test_statement_parser_desugars_missing_else():
    s = parse_stmt("if (x) y = 1;")
    assert isinstance(s, A.If) and isinstance(s.other, A.Null)
