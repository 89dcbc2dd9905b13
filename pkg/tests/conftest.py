import pytest

from solgraph.catalog import build
from solgraph.permcore import Group, Permutation
from solgraph.suite import view_of


def perm(text, n):
    return Permutation.parse(text, n)


def group(n, *gens):
    return Group([perm(g, n) for g in gens])


@pytest.fixture(scope="session")
def a5():
    return build("A(5)")


@pytest.fixture(scope="session")
def view():
    """Cached soluble-graph view by spec text."""
    return view_of


def dihedral(m):
    """Dihedral group of order 2m acting on an m-gon."""
    rotation = "(" + ",".join(str(i) for i in range(1, m + 1)) + ")"
    pairs = [(i, m + 2 - i) for i in range(2, m + 1) if i < m + 2 - i]
    reflection = "".join(f"({i},{j})" for i, j in pairs) or "()"
    return group(m, rotation, reflection)


def quaternion():
    # regular representation of Q8 on 8 points
    return group(8, "(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(LINES):
            terminalreporter.write_line(LINES[k])
