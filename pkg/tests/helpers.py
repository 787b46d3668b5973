# Small builders and brute-force oracles shared by the test modules.
import json
from itertools import combinations

from src.graph.network import from_weighted_pairs


def load_jsonl(path):
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def graph_from_edges(edges, names=None):
    """InGraph from (name_u, name_v, weight) triples plus optional isolated names."""
    all_names = set(names or ())
    for u, v, _ in edges:
        all_names.update((u, v))
    return from_weighted_pairs(all_names, {(u, v): w for u, v, w in edges})


def clique_edges(names, weight):
    return [(u, v, weight) for u, v in combinations(names, 2)]


def adjacency_sets(g):
    neighbours = {node: set() for node in range(g.node_count)}
    for u, v, _ in g.weighted_edges():
        neighbours[u].add(v)
        neighbours[v].add(u)
    return neighbours


def set_partitions(items):
    """Every partition of items into non-empty blocks (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for index in range(len(smaller)):
            yield smaller[:index] + [[first] + smaller[index]] + smaller[index + 1:]
        yield [[first]] + smaller
