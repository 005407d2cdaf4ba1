import pytest

from nakatau.algebra import IndModule, SignedInd, named_algebra


def M(top, length, comp=0):
    return IndModule(comp, top, length)


def S(top, comp=0):
    return IndModule(comp, top, 1)


def sh(m):
    return SignedInd(m, 1)


def un(m):
    return SignedInd(m, 0)


@pytest.fixture(scope="session")
def a3():
    return named_algebra("a3")


@pytest.fixture(scope="session")
def a4():
    return named_algebra("a4")


@pytest.fixture(scope="session")
def d3():
    return named_algebra("d3")


@pytest.fixture(scope="session")
def e5():
    return named_algebra("e5")


@pytest.fixture(scope="session")
def n2():
    return named_algebra("n2")


@pytest.fixture(scope="session")
def named():
    return [named_algebra(n) for n in ("a3", "a4", "d3", "e5", "n2")]


# acceptance criteria report one line each, even when output is captured
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
