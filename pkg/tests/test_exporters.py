import io

import networkx as nx
import pydot
import pytest

from helpers import graph_from_edges
from src.graph.exporters import edge_list_tsv, export_network, histogram_csv, to_dot, to_graphml
from src.graph.network_stats import degree_distribution


@pytest.fixture
def small_network():
    return graph_from_edges([("salt", "oil", 3), ("ghee", "salt", 1), ("oil", "cumin seeds", 2)], names=["saffron"])


def test_edge_list_is_sorted_and_tab_separated(small_network):
    assert edge_list_tsv(small_network) == "cumin seeds\toil\t2\nghee\tsalt\t1\noil\tsalt\t3\n"


def test_single_edge_list_line():
    assert edge_list_tsv(graph_from_edges([("b", "a", 1)])) == "a\tb\t1\n"


def test_dot_parses_and_keeps_weights(small_network):
    graphs = pydot.graph_from_dot_data(to_dot(small_network))
    assert graphs and len(graphs) == 1
    parsed = nx.drawing.nx_pydot.from_pydot(graphs[0])

    assert parsed.number_of_edges() == small_network.edge_count
    weights = {}
    for u, v, data in parsed.edges(data=True):
        pair = tuple(sorted((u.strip('"'), v.strip('"'))))
        weights[pair] = int(str(data["weight"]).strip('"'))
    assert weights[("oil", "salt")] == 3
    assert weights[("cumin seeds", "oil")] == 2


def test_graphml_round_trip(small_network):
    parsed = nx.read_graphml(io.BytesIO(to_graphml(small_network).encode("utf-8")))

    assert sorted(parsed.nodes) == list(small_network.names)
    assert parsed["oil"]["salt"]["weight"] == 3
    assert parsed["ghee"]["salt"]["weight"] == 1


def test_exports_are_deterministic(small_network):
    for fmt in ("tsv", "dot", "graphml"):
        assert export_network(small_network, fmt) == export_network(small_network, fmt)


def test_unknown_export_format(small_network):
    with pytest.raises(ValueError, match="valid formats"):
        export_network(small_network, "gexf")


def test_histogram_csv_columns():
    g = graph_from_edges([("hub", f"leaf{i}", 1) for i in range(4)])
    assert histogram_csv(degree_distribution(g)) == "degree,count\n1,4\n4,1\n"
    assert histogram_csv(degree_distribution(g, cumulative=True)) == "degree,nodes_with_degree_at_least\n1,5\n4,1\n"
