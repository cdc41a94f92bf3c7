import sys

import pytest

from ccenum import parse_digraph
from helpers import EXAMPLE_TEXT


@pytest.fixture
def example():
    return parse_digraph(EXAMPLE_TEXT)


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE_TEXT)
    return path


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
