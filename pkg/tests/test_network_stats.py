import random
from collections import deque
from itertools import combinations
from math import comb

import pytest

from helpers import adjacency_sets, clique_edges, graph_from_edges
from src.graph.network_stats import (
    avg_edge_weight,
    clustering_stats,
    compute_stats,
    degree_distribution,
    diameter,
    largest_component,
    local_clustering,
    powerlaw_tail_slope,
    strongest_edges,
)
from src.synthetic.graph_generators import preferential_attachment_network, random_weighted_network
from src.utils.errors import GraphError


def path_graph(length):
    names = [f"p{i}" for i in range(length)]
    return graph_from_edges([(names[i], names[i + 1], 1) for i in range(length - 1)])


def star_graph(leaves):
    return graph_from_edges([("hub", f"leaf{i}", 1) for i in range(leaves)])


def brute_force_triangles(g):
    neighbours = adjacency_sets(g)
    return sum(
        1
        for a, b, c in combinations(range(g.node_count), 3)
        if b in neighbours[a] and c in neighbours[a] and c in neighbours[b]
    )


def brute_force_clustering(g):
    neighbours = adjacency_sets(g)
    result = {}
    for node, around in neighbours.items():
        if len(around) < 2:
            result[node] = 0.0
            continue
        links = sum(1 for u, v in combinations(sorted(around), 2) if v in neighbours[u])
        result[node] = links / comb(len(around), 2)
    return result


def bfs_distances(neighbours, source):
    distances = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for nxt in neighbours[node]:
            if nxt not in distances:
                distances[nxt] = distances[node] + 1
                queue.append(nxt)
    return distances


def brute_force_diameter(g):
    neighbours = adjacency_sets(g)
    components = []
    seen = set()
    for node in range(g.node_count):
        if node not in seen:
            component = set(bfs_distances(neighbours, node))
            seen |= component
            components.append(component)
    largest = max(components, key=lambda nodes: (len(nodes), -min(nodes)))
    return max(max(bfs_distances(neighbours, node).values()) for node in largest)


def test_triangle_statistics():
    avg_cc, triangles, fraction = clustering_stats(graph_from_edges(clique_edges("abc", 1)))
    assert (avg_cc, triangles, fraction) == (1.0, 1, 1.0)


def test_path_statistics():
    assert clustering_stats(path_graph(3)) == (0.0, 0, 0.0)


def test_empty_graph_statistics():
    assert clustering_stats(graph_from_edges([])) == (0.0, 0, 0.0)


@pytest.mark.parametrize("seed", range(50))
def test_clustering_matches_triple_enumeration(seed):
    rng = random.Random(seed)
    p = 0.05 if seed % 2 else 0.2
    g = random_weighted_network(rng.randint(10, 60), p, seed=seed)

    avg_cc, triangles, fraction = clustering_stats(g)
    expected_local = brute_force_clustering(g)
    expected_triangles = brute_force_triangles(g)
    triples = sum(comb(len(around), 2) for around in adjacency_sets(g).values())

    assert triangles == expected_triangles
    assert local_clustering(g) == expected_local
    assert avg_cc == pytest.approx(sum(expected_local.values()) / g.node_count, abs=1e-12)
    expected_fraction = 3 * expected_triangles / triples if triples else 0.0
    assert fraction == pytest.approx(expected_fraction, abs=1e-12)
    assert 0.0 <= avg_cc <= 1.0


def test_diameter_of_path_and_clique():
    assert diameter(path_graph(5)) == 4
    assert diameter(graph_from_edges(clique_edges("abcd", 1))) == 1


def test_diameter_of_single_node():
    assert diameter(graph_from_edges([], names=["salt"])) == 0


def test_diameter_of_empty_graph_is_an_error():
    with pytest.raises(GraphError):
        diameter(graph_from_edges([]))


def test_diameter_uses_largest_component():
    g = graph_from_edges(clique_edges("abc", 1) + [("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 1)])
    assert diameter(g) == 3


def test_largest_component_tie_goes_to_smallest_id():
    g = graph_from_edges([("a", "b", 1), ("c", "d", 1)])
    assert largest_component(g) == {0, 1}


@pytest.mark.parametrize("seed", range(50))
def test_diameter_matches_all_pairs_bfs(seed):
    rng = random.Random(100 + seed)
    g = random_weighted_network(rng.randint(5, 100), 0.08, seed=100 + seed)
    assert diameter(g) == brute_force_diameter(g)


def test_avg_edge_weight_small_graphs():
    assert avg_edge_weight(graph_from_edges([("a", "b", 5)])) == 5.0
    assert avg_edge_weight(graph_from_edges([("a", "b", 1), ("b", "c", 2), ("c", "d", 3)])) == 2.0


def test_avg_edge_weight_without_edges_is_an_error():
    with pytest.raises(GraphError):
        avg_edge_weight(graph_from_edges([], names=["a", "b"]))


@pytest.mark.parametrize("seed", range(10))
def test_avg_edge_weight_matches_summation(seed):
    g = random_weighted_network(50, 0.2, seed=seed)
    weights = [w for _, _, w in g.weighted_edges()]
    assert avg_edge_weight(g) == pytest.approx(sum(weights) / len(weights), rel=1e-9)


def test_strongest_edges_order():
    g = graph_from_edges([("oil", "salt", 7), ("ghee", "salt", 7), ("a", "b", 2), ("b", "c", 9)])
    assert strongest_edges(g, 3) == [("b", "c", 9), ("ghee", "salt", 7), ("oil", "salt", 7)]


def test_degree_distribution_of_triangle():
    assert degree_distribution(graph_from_edges(clique_edges("abc", 1))).entries == {2: 3}


def test_degree_distribution_of_star():
    g = star_graph(4)
    assert degree_distribution(g).entries == {1: 4, 4: 1}
    cumulative = degree_distribution(g, cumulative=True)
    assert cumulative.cumulative
    assert cumulative.entries == {1: 5, 4: 1}


@pytest.mark.parametrize("seed", range(10))
def test_degree_histograms_are_consistent(seed):
    g = random_weighted_network(80, 0.1, seed=seed)
    plain = degree_distribution(g)
    cumulative = degree_distribution(g, cumulative=True)

    assert sum(plain.entries.values()) == g.node_count
    counts = [cumulative.entries[d] for d in sorted(cumulative.entries)]
    assert counts == sorted(counts, reverse=True)
    assert counts[0] == g.node_count


def test_preferential_attachment_tail_slope_is_negative():
    g = preferential_attachment_network(2000, 3, seed=1)
    slope = powerlaw_tail_slope(degree_distribution(g))
    assert slope is not None
    assert slope < 0


def test_tail_slope_needs_two_points():
    assert powerlaw_tail_slope(degree_distribution(graph_from_edges(clique_edges("abc", 1)))) is None


def test_stats_of_edgeless_graph_omit_weight():
    report = compute_stats(graph_from_edges([], names=["a", "b"]))
    assert report.avg_edge_weight is None
    assert report.strongest_edge is None
    assert report.diameter == 0
    assert any("avg_edge_weight" in warning for warning in report.warnings)


def test_mini_network_stats_match_oracles(mini_network, mini_manifest):
    report = compute_stats(mini_network)
    weights = [w for _, _, w in mini_network.weighted_edges()]
    expected_local = brute_force_clustering(mini_network)

    assert report.node_count == mini_network.node_count
    assert report.edge_count == len(weights)
    assert report.triangle_count == brute_force_triangles(mini_network)
    assert report.avg_clustering_coefficient == pytest.approx(
        sum(expected_local.values()) / mini_network.node_count, abs=1e-12
    )
    assert report.diameter == brute_force_diameter(mini_network)
    assert report.avg_edge_weight == pytest.approx(sum(weights) / len(weights), rel=1e-9)
    assert report.avg_edge_weight >= 1
    assert list(report.strongest_edge) == mini_manifest["strongest_edge"]
    assert report.warnings == []
