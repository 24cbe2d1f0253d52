import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
ROOT = HERE.parent
sys.path.insert(0, str(HERE))

GOLDEN = HERE / "golden"
NEGATIVE = HERE / "negative"
CASES = ROOT / "cases"
SYNTHETIC = ROOT / "corpus" / "synthetic"


@pytest.fixture
def tmp_case(tmp_path):
    """Writes a case directory and returns its path."""
    def make(source, externs="{}", verdict=None, name="case"):
        d = tmp_path / name
        d.mkdir()
        (d / "input.c").write_text(source)
        if externs is not None:
            (d / "externs.json").write_text(externs)
        if verdict is not None:
            (d / "expected.verdict").write_text(verdict)
        return d
    return make


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
