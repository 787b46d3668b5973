# Synthetic ingredient networks with known structure, used by detector and statistics tests.
import random

import networkx as nx

from src.graph.network import from_weighted_pairs


def node_name(node):
    return f"n{node:05d}"


def from_networkx(graph, weight_of=lambda u, v: 1):
    """Wrap an integer-labelled networkx graph as an InGraph; node i becomes name n0000i."""
    names = [node_name(node) for node in graph.nodes]
    pairs = {(node_name(u), node_name(v)): weight_of(u, v) for u, v in graph.edges}
    return from_weighted_pairs(names, pairs)


def random_weighted_network(n, p, seed, max_weight=10):
    """Erdős–Rényi G(n, p) with uniform integer weights in 1..max_weight."""
    rng = random.Random(seed)
    graph = nx.gnp_random_graph(n, p, seed=seed)
    weights = {edge: rng.randint(1, max_weight) for edge in graph.edges}
    return from_networkx(graph, lambda u, v: weights[(u, v)])


def planted_partition_network(block_size, blocks, p_in, p_out, w_in, w_out, seed):
    """
    Planted-partition graph: dense heavy edges inside blocks, sparse light edges between.
    Returns (InGraph, ground-truth blocks as lists of node ids).
    """
    graph = nx.planted_partition_graph(blocks, block_size, p_in, p_out, seed=seed)
    block_of = {node: index for index, members in enumerate(graph.graph["partition"]) for node in members}
    network = from_networkx(graph, lambda u, v: w_in if block_of[u] == block_of[v] else w_out)
    truth = [sorted(members) for members in graph.graph["partition"]]
    return network, truth


def preferential_attachment_network(n, m, seed):
    """Barabási–Albert graph, the usual scale-free reference."""
    return from_networkx(nx.barabasi_albert_graph(n, m, seed=seed))
