import pytest
from hypothesis import strategies as st

from numset import NumericalSet, parse_set

EXAMPLE_TEXT = "0,2,4,7,8,10,12->"


@pytest.fixture
def example():
    return parse_set(EXAMPLE_TEXT)


def gapsets(max_gap=24):
    return st.frozensets(st.integers(1, max_gap), max_size=max_gap)


def numerical_sets(max_gap=24):
    return gapsets(max_gap).map(NumericalSet.from_gaps)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
