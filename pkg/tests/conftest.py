import pytest

from sparking import Multigraph, SetSystem, complete_graph, uniform_matroid


@pytest.fixture
def u42_system():
    """The rank-2 uniform example family: {1,2,3} and {1,2,4}, identity weights."""
    return SetSystem([{1, 2, 3}, {1, 2, 4}])


@pytest.fixture
def u42():
    return uniform_matroid(4, 2)


@pytest.fixture
def k3():
    """Triangle on vertices 0,1,2 with edges 1=01, 2=02, 3=12."""
    return complete_graph(3)


@pytest.fixture
def two_triangles():
    """Two triangles sharing edge 3: vertices 0..3, edges 1=01, 2=02, 3=12, 4=13, 5=23."""
    return Multigraph(4, [(1, 0, 1), (2, 0, 2), (3, 1, 2), (4, 1, 3), (5, 2, 3)])
