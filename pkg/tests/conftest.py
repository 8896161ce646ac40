import pytest

from loewy import instances
from loewy.core import build_from_covers
from loewy.enumeration import corpus

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus7():
    return corpus(7)


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


@pytest.fixture
def diamond():
    """B_2 with elements 0, a, b, 1."""
    return build_from_covers([(0, 1), (0, 2), (1, 3), (2, 3)], 4, ["0", "a", "b", "1"])


@pytest.fixture
def chain4():
    return build_from_covers([(0, 1), (1, 2), (2, 3)], 4, ["0", "x", "y", "1"])


@pytest.fixture
def n5():
    return instances.pentagon()


@pytest.fixture
def m3():
    return instances.diamond_m(3)


@pytest.fixture
def d12():
    return instances.divisor_lattice(12)


@pytest.fixture
def single():
    return build_from_covers([], 1)
