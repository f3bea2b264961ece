import itertools

import pytest

from ltopology.frames import diamond, three_chain, two_chain
from ltopology.spaces import constant_lset


@pytest.fixture
def F2():
    return two_chain()


@pytest.fixture
def F3():
    return three_chain()


@pytest.fixture
def D4():
    return diamond()


def naive_topology(L, n, generators):
    """Close a family of L-sets under pairwise meets and joins plus both constants.

    Deliberately different from the library's meets-then-joins generation.
    """
    out = {constant_lset(L, n, L.bottom), constant_lset(L, n, L.top)}
    out.update(tuple(g) for g in generators)
    while True:
        new = set(out)
        for a, b in itertools.product(out, repeat=2):
            new.add(tuple(L.meet(u, v) for u, v in zip(a, b)))
            new.add(tuple(L.join(u, v) for u, v in zip(a, b)))
        if new == out:
            return out
        out = new


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
