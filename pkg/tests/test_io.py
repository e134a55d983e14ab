import pytest

from cutenum.errors import GraphParseError
from cutenum.graphs import Graph, parse_graph, random_connected_graph, read_graph, serialize_graph, write_graph


def test_decimal_weights_are_scaled_exactly():
    g = parse_graph('2 2\n0 1 1.5\n0 1 1.5\n')
    assert g.scale == 10
    assert g.edges == ((0, 1, 30),)
    assert g.total_weight == 30

def test_mixed_precision_uses_the_finest_scale():
    g = parse_graph('3 2\n0 1 0.5\n1 2 1.25\n')
    assert g.scale == 100
    assert g.edges == ((0, 1, 50), (1, 2, 125))

def test_integer_weights_keep_scale_one():
    g = parse_graph('3 2\n0 1 2\n1 2 3.000\n')
    assert g.scale == 1
    assert g.edges == ((0, 1, 2), (1, 2, 3))

def test_comments_blank_lines_and_self_loops():
    text = '# a path\n\n3 3\n0 1 1\n  # loop below\n1 1 4\n1 2 1\n'
    g = parse_graph(text)
    assert g.n == 3
    assert g.edges == ((0, 1, 1), (1, 2, 1))

@pytest.mark.parametrize('text, line', [
    ('', None),
    ('3\n', 1),
    ('x 1\n0 1 1\n', 1),
    ('0 0\n', 1),
    ('3 2\n0 1 1\n', None),
    ('3 1\n0 1 1\n1 2 1\n', 3),
    ('3 1\n0 3 1\n', 2),
    ('3 1\n0 1\n', 2),
    ('3 1\n0 1 0\n', 2),
    ('3 1\n0 1 -2\n', 2),
    ('3 1\n0 1 nan\n', 2),
    ('3 1\n0 1 inf\n', 2),
    ('3 1\n0 1 abc\n', 2),
    ('3 2\n# c\n0 1 1\n1 b 1\n', 4),
])
def test_parse_errors_report_the_line(text, line):
    with pytest.raises(GraphParseError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line == line
    if line is not None:
        assert str(excinfo.value).startswith(f'line {line}:')

def test_weight_overflow_after_scaling():
    with pytest.raises(GraphParseError):
        parse_graph('2 1\n0 1 9223372036854775808\n')
    with pytest.raises(GraphParseError) as excinfo:
        parse_graph('3 2\n0 1 922337203685477580.7\n1 2 0.1\n')
    assert excinfo.value.line == 3

def test_serialize_round_trip():
    g = parse_graph('4 3\n0 1 0.25\n1 2 3\n2 3 1.5\n')
    text = serialize_graph(g)
    assert text.splitlines()[1] == '0 1 0.25'
    assert parse_graph(text) == g

    h = random_connected_graph(8, seed=4)
    assert parse_graph(serialize_graph(h)) == h

def test_read_and_write_files(tmp_path):
    g = Graph(3, [(0, 1, 2), (1, 2, 5)])
    path = tmp_path / 'g.txt'
    write_graph(g, path)
    assert read_graph(path) == g
    with pytest.raises(OSError):
        read_graph(tmp_path / 'missing.txt')
