# Weighted Louvain baseline (two-phase local moving + aggregation) on the ingredient network.
from pydantic import BaseModel, ConfigDict

import networkx as nx

from src.community.modularity import modularity
from src.community.partition import Partition
from src.utils.errors import GraphError
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Minimum modularity gain for another aggregation level
LOUVAIN_THRESHOLD = 1e-7


class LouvainLevel(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int
    communities: int
    modularity: float


def louvain_with_trace(g, resolution=1.0, seed=0):
    """Louvain on edge weights; returns (final Partition, modularity per aggregation level)."""
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if g.edge_count == 0:
        raise GraphError("Louvain needs a graph with at least one edge")

    # seed fixes the node visit order of every local-moving phase
    levels = nx.community.louvain_partitions(
        g.graph, weight="weight", resolution=resolution, threshold=LOUVAIN_THRESHOLD, seed=seed
    )

    trace = []
    partition = None
    for level, communities in enumerate(levels, start=1):
        partition = Partition.from_groups(communities, g.node_count)
        trace.append(
            LouvainLevel(
                level=level,
                communities=partition.community_count,
                modularity=modularity(g, partition, resolution),
            )
        )

    for before, after in zip(trace, trace[1:]):
        if after.modularity < before.modularity - 1e-12:
            logger.warning(
                "Louvain modularity decreased between levels",
                extra={"level": after.level, "before": before.modularity, "after": after.modularity},
            )

    logger.info(
        "Louvain finished",
        extra={"levels": len(trace), "communities": partition.community_count, "seed": seed},
    )
    return partition, trace


def louvain_weighted(g, resolution=1.0, seed=0):
    partition, _ = louvain_with_trace(g, resolution=resolution, seed=seed)
    return partition
