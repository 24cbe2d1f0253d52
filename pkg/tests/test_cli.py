import json

import pytest

from c2m.cli import main

from conftest import CASES, GOLDEN


@pytest.fixture
def src(tmp_path):
    def write(text, name="p.c"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_translate_golden(tmp_path, capsys):
    out = tmp_path / "mtf.m"
    assert main(["translate", str(GOLDEN / "mtf.c"), "-o", str(out), "--canonical"]) == 0
    assert out.read_text() == (GOLDEN / "mtf.m").read_text()
    assert "LOC" in capsys.readouterr().err


def test_translate_is_byte_identical(src, capsys):
    p = src("int a[4]; int main(void){int i; for (i = 0; i < 4; i++) a[i] = i; return 0;}")
    main(["translate", p])
    first = capsys.readouterr().out
    main(["translate", p])
    assert capsys.readouterr().out == first


def test_translate_json_line(src, capsys):
    main(["translate", src("int main(void){return 0;}"), "--json"])
    line = json.loads(capsys.readouterr().err)
    assert set(line) == {"file", "loc", "lom", "ms"}


def test_union_is_rejected_with_item_2(src, capsys):
    assert main(["translate", src("union u {int a;}; int main(void){return 0;}")]) == 2
    assert "[item-2]" in capsys.readouterr().err


def test_empty_file_has_no_main(src, capsys):
    assert main(["translate", src("")]) == 2
    assert "no main" in capsys.readouterr().err


def test_missing_input_file(tmp_path, capsys):
    assert main(["translate", str(tmp_path / "nope.c")]) == 2


def test_run_xdc_return_zero(src, capsys):
    assert main(["run", "xdc", src("int main(void){return 0;}")]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "terminates(0)"


def test_run_msvl_unit_assignment(src, tmp_path, capsys):
    dump = tmp_path / "iv.jsonl"
    p = src("int x and x:=1", "x.m")
    assert main(["run", "msvl", p, "--json", "--dump-interval", str(dump)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["interval_length"] == 2
    states = [json.loads(line) for line in dump.read_text().splitlines()]
    assert len(states) == 2


def test_run_translated_c_through_msvl(src, capsys):
    assert main(["run", "msvl", src("int main(void){int x; x = 6; return x * 7;}")]) == 0
    assert capsys.readouterr().out.startswith("terminates(42)")


@pytest.mark.parametrize("lang", ["xdc", "msvl"])
def test_fuel_one_times_out(src, lang, capsys):
    p = src("int main(void){int i; i = 0; while (i < 100) { i++; } return i;}")
    assert main(["run", lang, p, "--fuel", "1"]) == 4


def test_fuel_from_environment(src, monkeypatch, capsys):
    monkeypatch.setenv("C2M_FUEL", "1")
    assert main(["run", "xdc", src("int main(void){while (1) { ; } return 0;}")]) == 4
    monkeypatch.setenv("C2M_FUEL", "many")
    assert main(["run", "xdc", src("int main(void){return 0;}")]) == 2


def test_zero_fuel_is_a_usage_error(src, capsys):
    assert main(["run", "xdc", src("int main(void){return 0;}"), "--fuel", "0"]) == 2


def test_runtime_error_exit(src, capsys):
    assert main(["run", "xdc", src("int main(void){int x; return x;}")]) == 2


def test_xdc_trace_file(src, tmp_path, capsys):
    trace = tmp_path / "t.jsonl"
    main(["run", "xdc", src("int g; int main(void){g = 3; return g;}"), "--trace", str(trace)])
    lines = [json.loads(s) for s in trace.read_text().splitlines()]
    assert lines[-1] == {"snapshot": {"g": 3}}
    assert any(d.get("value") == 3 for d in lines)


def test_diff_single_case(capsys):
    assert main(["diff", str(CASES / "bubble_sort")]) == 0
    assert "1/1 passed" in capsys.readouterr().out


def test_diff_corrupted_snapshot(tmp_case, capsys):
    d = tmp_case("int x; int main(void){x = 1; return 0;}",
                 verdict=json.dumps({"snapshot": {"x": 2}}))
    assert main(["diff", str(d)]) == 3
    assert "witness" in capsys.readouterr().out


def test_diff_missing_externs(tmp_case, capsys):
    d = tmp_case("int main(void){return 0;}", externs=None)
    assert main(["diff", str(d)]) == 2
    assert "externs.json" in capsys.readouterr().err


def test_diff_writes_junit_and_json(tmp_case, tmp_path, capsys):
    d = tmp_case("int main(void){return 0;}")
    junit = tmp_path / "r.xml"
    assert main(["diff", str(d), "--json", "--junit", str(junit)]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] == 1
    assert junit.read_text().startswith("<testsuite")


def test_stats_single_file_has_no_fit(src, capsys):
    assert main(["stats", src("int main(void){int x; x = 1; return x;}"), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["fit"] is None and out["total"]["ratio"] > 0


def test_stats_text_table(tmp_path, capsys):
    for k in (1, 2, 4):
        body = " ".join(f"x = x + {i};" for i in range(k * 10))
        (tmp_path / f"s{k}.c").write_text(f"int x; int main(void){{ {body} return 0; }}")
    assert main(["stats", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "mean LOM/LOC" in out and "R^2" in out
