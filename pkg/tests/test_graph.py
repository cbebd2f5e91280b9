import pickle

import numpy as np
import pytest

from ftbfs.errors import (
    CountMismatchError,
    DuplicateEdgeError,
    FaultRangeError,
    GraphParseError,
    HeaderError,
    SelfLoopError,
    VertexRangeError,
)
from ftbfs.graph import (
    FaultModel,
    FaultScenario,
    Graph,
    apply_fault,
    iter_faults,
    parse_graph,
    read_graph,
    save_graph,
    write_graph,
)


def test_parse_keeps_line_order_as_edge_ids():
    g = parse_graph("3 3\n0 1\n1 2\n0 2")
    assert g.n == 3 and g.m == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))


def test_parse_normalizes_endpoints():
    g = parse_graph("3 1\n2 0\n")
    assert g.edges == ((0, 2),)
    assert write_graph(g) == "3 1\n0 2\n"


def test_comments_and_blank_lines_are_skipped():
    g = parse_graph("# a comment\n\n4 2\n# edges follow\n0 1\n\n2 3\n")
    assert g.edges == ((0, 1), (2, 3))


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("2 1\n0 0", SelfLoopError, 2),
        ("3 2\n0 1\n0 1", DuplicateEdgeError, 3),
        ("3 2\n0 1\n1 0", DuplicateEdgeError, 3),
        ("3 1\n0 3", VertexRangeError, 2),
        ("3 2\n0 1", CountMismatchError, 2),
        ("3 1\n0 1\n1 2", CountMismatchError, 3),
        ("3 x\n", GraphParseError, 1),
        ("2 1\n0 ١\n", GraphParseError, 2),
        ("2 1\n0 0_1\n", GraphParseError, 2),
        ("٢ 1\n0 1\n", GraphParseError, 1),
    ],
)
def test_parse_errors_name_the_line(text, error, line):
    with pytest.raises(error) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"at line {line}" in str(info.value)


def test_missing_header():
    with pytest.raises(HeaderError):
        parse_graph("# only a comment\n")


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_graph("2 1\n1 1\n")


@pytest.mark.parametrize("text", ["1 0\n", "3 3\n0 1\n1 2\n0 2\n", "5 2\n3 4\n0 2\n"])
def test_canonical_text_round_trips(text):
    assert write_graph(parse_graph(text)) == text


def test_graph_round_trips_through_text(c5):
    assert parse_graph(write_graph(c5)) == c5


def test_file_helpers(tmp_path, k3):
    path = tmp_path / "sub" / "k3.txt"
    save_graph(k3, path)
    assert path.read_bytes() == b"3 3\n0 1\n1 2\n0 2\n"
    assert read_graph(path) == k3


def test_adjacency_lists_every_edge_twice(c5):
    seen = {}
    for v in range(c5.n):
        for w, e in c5.neighbors(v):
            seen.setdefault(e, set()).add(v)
            assert set(c5.endpoints(e)) == {v, w}
    assert all(len(ends) == 2 for ends in seen.values())
    assert sorted(seen) == list(range(c5.m))


def test_edge_index_and_degree(c4):
    assert c4.edge_index(3, 0) == 3
    assert c4.edge_index(0, 2) is None
    assert c4.degree(1) == 2


def test_from_edges_takes_numpy_pairs():
    us, vs = np.array([0, 2]), np.array([1, 1])
    g = Graph.from_edges(3, zip(us, vs))
    assert g.edges == ((0, 1), (1, 2))
    assert all(type(x) is int for pair in g.edges for x in pair)


def test_graph_pickles_by_edge_list(c5):
    clone = pickle.loads(pickle.dumps(c5))
    assert clone == c5
    assert clone.adjacency == c5.adjacency
    assert clone.edge_index(4, 0) == 4


def test_constructor_rejects_non_simple_graphs():
    with pytest.raises(SelfLoopError):
        Graph(2, [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(VertexRangeError):
        Graph(2, [(0, 2)])


def test_no_fault_view_is_the_graph(c4):
    assert apply_fault(c4, FaultScenario.no_fault()).edge_ids() == [0, 1, 2, 3]


def test_edge_fault_hides_one_edge(c4):
    assert apply_fault(c4, FaultScenario.edge(0)).edge_ids() == [1, 2, 3]


def test_vertex_fault_hides_incident_edges(k3):
    view = apply_fault(k3, FaultScenario.vertex(2))
    assert view.edge_ids() == [0]
    assert not view.has_vertex(2)
    assert list(view.neighbors(2)) == []


def test_fault_on_subgraph_view_keeps_restriction(c4):
    view = apply_fault(c4.view(frozenset({0, 1, 2})), FaultScenario.edge(1))
    assert view.edge_ids() == [0, 2]


@pytest.mark.parametrize(
    "fault", [FaultScenario.edge(4), FaultScenario.vertex(4)]
)
def test_out_of_range_faults(c4, fault):
    with pytest.raises(FaultRangeError):
        apply_fault(c4, fault)


def test_fault_scenario_labels():
    assert FaultScenario.no_fault().label() == "none"
    assert FaultScenario.edge(3).label() == "edge:3"
    assert FaultScenario.vertex(2).label() == "vertex:2"
    assert FaultScenario.edge(3).failed_vertex == -1
    with pytest.raises(ValueError):
        FaultScenario(kind="edge")


def test_iter_faults_orders_no_fault_first(k3):
    edges = [f.label() for f in iter_faults(k3, FaultModel.EDGE)]
    assert edges == ["none", "edge:0", "edge:1", "edge:2"]
    vertices = [f.label() for f in iter_faults(k3, FaultModel.VERTEX, source=1)]
    assert vertices == ["none", "vertex:0", "vertex:2"]
