import pytest

from cutenum.graphs import Graph, complete_graph, cycle_graph, path_graph, tightness_instance


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)

@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)

@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)

@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)

@pytest.fixture
def c8() -> Graph:
    return cycle_graph(8)

@pytest.fixture
def weighted_triangle() -> Graph:
    return Graph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])

@pytest.fixture
def tightness():
    ''' 16-vertex unit cycle and its four 2-vertex arcs '''
    return tightness_instance(4)

@pytest.fixture
def write_graph_file(tmp_path):
    ''' Write edge-list text to a file and return its path '''
    def _write(text: str, name: str = 'graph.txt') -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
