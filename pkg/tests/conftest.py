import sys
from pathlib import Path

import pytest

from heisenberg_voa.fock import State, make_algebra

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def rank1():
    return make_algebra(1)


@pytest.fixture(scope="session")
def rank2():
    return make_algebra(2)


@pytest.fixture(scope="session")
def rank3():
    return make_algebra(3)


def h(*factors, coeff=1):
    """State from (index, level) pairs, e.g. h((1, 2), (1, 1))."""
    return State.from_factors(factors, coeff)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
