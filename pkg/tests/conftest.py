import sys
from pathlib import Path

import pytest

from discsplit.tree import parse_ptb, read_tree_lines

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

FIXTURES = HERE / "fixtures"


@pytest.fixture(scope="session")
def fluoro_ptb():
    (line,) = read_tree_lines((FIXTURES / "fluoroscopy.ptb").read_text(encoding="utf-8").splitlines())
    return line


@pytest.fixture(scope="session")
def fluoro_tree(fluoro_ptb):
    return parse_ptb(fluoro_ptb)


@pytest.fixture(scope="session")
def corpus():
    from discsplit.parsing import load_corpus

    return load_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
