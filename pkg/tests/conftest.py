import pytest

from graphcomplex import Graph, parse_graph


@pytest.fixture
def edge():
    return Graph(2, ((1, 2),))


@pytest.fixture
def path3():
    return parse_graph("3: (1,2),(2,3)")


@pytest.fixture
def triangle():
    return parse_graph("3: (1,2),(1,3),(2,3)")


@pytest.fixture
def square():
    return parse_graph("4: (1,2),(2,3),(3,4),(1,4)")


@pytest.fixture
def k4():
    return parse_graph("4: (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)")
