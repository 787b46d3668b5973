# Statistics of the ingredient network: clustering, triangles, diameter, weights, degree distribution.
# Structural measures run on the unweighted simple graph; weights only feed the weight statistics.
from typing import Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.utils.errors import GraphError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class DegreeHistogram(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: dict[int, int]
    cumulative: bool = False


class StatsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    node_count: int
    edge_count: int
    avg_clustering_coefficient: float = Field(ge=0, le=1)
    triangle_count: int = Field(ge=0)
    fraction_closed_triangles: float = Field(ge=0, le=1)
    diameter: Optional[int] = None
    avg_edge_weight: Optional[float] = None
    strongest_edge: Optional[tuple[str, str, int]] = None
    degree_tail_slope: Optional[float] = None
    warnings: list[str] = Field(default_factory=list)


def local_clustering(g):
    """Local clustering coefficient per node id; nodes of degree < 2 get 0."""
    return nx.clustering(g.graph)


def clustering_stats(g):
    """Return (average clustering coefficient, triangle count, transitivity)."""
    if g.node_count == 0:
        return 0.0, 0, 0.0
    avg_cc = nx.average_clustering(g.graph)
    triangle_count = sum(nx.triangles(g.graph).values()) // 3
    transitivity = nx.transitivity(g.graph)
    return avg_cc, triangle_count, transitivity


def largest_component(g):
    """Node ids of the largest connected component; ties go to the one holding the smallest id."""
    if g.node_count == 0:
        raise GraphError("graph has no nodes")
    return max(nx.connected_components(g.graph), key=lambda nodes: (len(nodes), -min(nodes)))


def diameter(g):
    """Longest shortest path (hop count) inside the largest connected component."""
    component = largest_component(g)
    return nx.diameter(g.graph.subgraph(component), usebounds=True)


def avg_edge_weight(g):
    if g.edge_count == 0:
        raise GraphError("graph has no edges; average edge weight is undefined")
    weights = np.fromiter((w for _, _, w in g.graph.edges(data="weight")), dtype=np.float64)
    return float(weights.mean())


def strongest_edges(g, k=1):
    """Top-k heaviest associations as (name_u, name_v, weight), heaviest first."""
    return sorted(g.named_edges(), key=lambda edge: (-edge[2], edge[0], edge[1]))[:k]


def degree_distribution(g, cumulative=False):
    """
    Histogram of unweighted degrees. The cumulative form maps every observed degree d
    to the number of nodes with degree >= d.
    """
    counts = {}
    for _, degree in g.graph.degree():
        counts[degree] = counts.get(degree, 0) + 1

    if cumulative:
        running = 0
        entries = {}
        for degree in sorted(counts, reverse=True):
            running += counts[degree]
            entries[degree] = running
        counts = entries

    return DegreeHistogram(entries=dict(sorted(counts.items())), cumulative=cumulative)


def powerlaw_tail_slope(hist, min_degree=None):
    """
    Least-squares slope of log(count) against log(degree) over the tail of the histogram.

    The tail starts at min_degree, or at the most frequent degree when not given.
    Returns None when fewer than two tail points exist.
    """
    points = {degree: count for degree, count in hist.entries.items() if degree > 0 and count > 0}
    if not points:
        return None
    if min_degree is None:
        min_degree = min(points, key=lambda degree: (-points[degree], degree))

    tail = sorted((degree, count) for degree, count in points.items() if degree >= min_degree)
    if len(tail) < 2:
        return None
    log_degree = np.log([degree for degree, _ in tail])
    log_count = np.log([count for _, count in tail])
    slope, _ = np.polyfit(log_degree, log_count, 1)
    return float(slope)


def compute_stats(g):
    """Collect every network statistic; undefined values are omitted with a warning."""
    warnings = []
    avg_cc, triangle_count, transitivity = clustering_stats(g)

    graph_diameter = None
    if g.node_count:
        graph_diameter = diameter(g)
    else:
        warnings.append("graph has no nodes; diameter omitted")

    mean_weight = None
    strongest = None
    if g.edge_count:
        mean_weight = avg_edge_weight(g)
        strongest = strongest_edges(g, 1)[0]
    else:
        warnings.append("graph has no edges; avg_edge_weight omitted")

    report = StatsReport(
        node_count=g.node_count,
        edge_count=g.edge_count,
        avg_clustering_coefficient=avg_cc,
        triangle_count=triangle_count,
        fraction_closed_triangles=transitivity,
        diameter=graph_diameter,
        avg_edge_weight=mean_weight,
        strongest_edge=strongest,
        degree_tail_slope=powerlaw_tail_slope(degree_distribution(g)),
        warnings=warnings,
    )
    for warning in warnings:
        logger.warning(warning)
    logger.info(
        "Network statistics computed",
        extra={"nodes": report.node_count, "edges": report.edge_count, "triangles": report.triangle_count},
    )
    return report
