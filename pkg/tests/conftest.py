import pytest

from ftbfs.graph import Graph


@pytest.fixture
def c4() -> Graph:
    # e0={0,1}, e1={1,2}, e2={2,3}, e3={3,0}
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def k3() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3() -> Graph:
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def star4() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def tree7() -> Graph:
    return Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
