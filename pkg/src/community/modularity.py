# Run this script in terminal: python3 -m src.community.modularity
# Weighted Newman modularity of a partition, used to score both detectors.
from src.utils.errors import GraphError, PartitionError


def modularity(g, p, resolution=1.0):
    """
    Q = (1/2m) * sum over same-community pairs of [A_uv - resolution * k_u * k_v / 2m].

    Evaluated per community as (4m * L_c - resolution * D_c^2) / (2m)^2 with integer
    sums, so the one-community partition gives exactly 0.
    """
    if p.node_count != g.node_count:
        raise PartitionError(
            f"partition covers {p.node_count} nodes but the graph has {g.node_count}"
        )
    total_weight = g.total_weight()
    if total_weight == 0:
        raise GraphError("modularity is undefined on a graph without edges")

    # internal: edge weight inside each community; degree_sums: weighted degree summed per community
    internal = [0] * p.community_count
    degree_sums = [0] * p.community_count
    for u, v, weight in g.graph.edges(data="weight"):
        cu, cv = p.assignment[u], p.assignment[v]
        # Each edge adds its weight to both endpoint degrees
        degree_sums[cu] += weight
        degree_sums[cv] += weight
        if cu == cv:
            internal[cu] += weight

    # Edge and degree sums stay integers; only resolution and the final division bring in floats
    internal_term = 4 * total_weight * sum(internal)
    null_term = sum(total * total for total in degree_sums)
    return (internal_term - resolution * null_term) / (4 * total_weight * total_weight)


if __name__ == "__main__":
    from src.community.partition import Partition
    from src.graph.network import from_weighted_pairs

    # Two triangles joined by one light edge
    demo = from_weighted_pairs(
        list("abcdef"),
        {("a", "b"): 1, ("b", "c"): 1, ("a", "c"): 1, ("d", "e"): 1, ("e", "f"): 1, ("d", "f"): 1, ("c", "d"): 1},
    )
    print("split:", modularity(demo, Partition((0, 0, 0, 1, 1, 1))))
    print("one community:", modularity(demo, Partition((0,) * 6)))
