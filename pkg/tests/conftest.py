import pytest

from minhom.digraph import Digraph, directed_cycle, transitive_tournament


def dg(n, arcs):
    return Digraph(n, frozenset(arcs))


@pytest.fixture
def c3():
    return directed_cycle(3)


@pytest.fixture
def tt3():
    return transitive_tournament(3)


# PASS/FAIL lines recorded by test_acceptance.py, echoed at the end of the run so they
# are visible even when pytest captures stdout
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
