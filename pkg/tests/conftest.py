import pytest

from irtopo import from_open_sets, from_reach
from irtopo.verifier import enumerate_spaces


def discrete(n):
    return from_reach([str(i) for i in range(n)], [1 << i for i in range(n)])


def indiscrete(n):
    full = (1 << n) - 1
    return from_reach([str(i) for i in range(n)], [full] * n)


@pytest.fixture
def sierpinski():
    return from_open_sets(["0", "1"], [[], [0], [0, 1]])


@pytest.fixture
def pseudocircle():
    # four points a, b, c, d with minimal opens {a}, {b}, {a,b,c}, {a,b,d}
    return from_reach(["a", "b", "c", "d"], [0b1101, 0b1110, 0b0100, 0b1000])


@pytest.fixture(scope="session")
def spaces_upto3():
    out = []
    for n in range(1, 4):
        out.extend(enumerate_spaces(n))
    return out


@pytest.fixture(scope="session")
def spaces_upto4():
    out = []
    for n in range(1, 5):
        out.extend(enumerate_spaces(n))
    return out
