# Weighted Association Based Community Detection (WABCD).
#
# Greedy agglomeration: every node starts alone; in each pass the surviving communities,
# taken in ascending id order, merge with the neighbouring community of highest average
# inter-community edge weight. The run stops when a pass merges nothing or when the
# pass's best average falls below the previous pass's best (that pass is not applied).
from collections import defaultdict
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict

from src.community.partition import Partition
from src.utils.errors import GraphError, PartitionError
from src.utils.logger import get_logger

logger = get_logger(__name__)

STOP_NO_MERGE = "no_merge"
STOP_AVERAGE_DECREASED = "average_decreased"


class Merge(BaseModel):
    model_config = ConfigDict(frozen=True)

    absorber: int
    absorbed: int
    average: float


class PassRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    pass_number: int
    merges: list[Merge]
    best_average: Optional[float] = None
    applied: bool
    communities: int
    stop_reason: Optional[str] = None


def _best_candidate(absorber, members, node_community, adjacency, unavailable):
    """Neighbouring community with the highest average edge weight to `absorber`."""
    sums = defaultdict(int)
    counts = defaultdict(int)
    for node in members[absorber]:
        for neighbour, weight in adjacency[node].items():
            candidate = node_community[neighbour]
            if candidate == absorber or candidate in unavailable:
                continue
            # The edge counter is per candidate community
            sums[candidate] += weight
            counts[candidate] += 1

    best = None
    best_average = Fraction(0)
    for candidate in sorted(sums):
        average = Fraction(sums[candidate], counts[candidate])
        if average > best_average:
            best, best_average = candidate, average
    return best, best_average


def _check_partition(members, node_count):
    seen = sorted(node for group in members.values() for node in group)
    if seen != list(range(node_count)):
        raise PartitionError("community structure no longer partitions the node set")


def wabcd(g):
    """
    Run WABCD on an InGraph.

    Returns (Partition, list of PassRecord). Community ids during the run are the
    smallest node id of each community; the returned Partition is renumbered densely.
    """
    if g.node_count == 0:
        raise GraphError("WABCD needs a non-empty graph")

    adjacency = {
        node: {neighbour: data["weight"] for neighbour, data in g.graph.adj[node].items()}
        for node in g.graph.nodes
    }
    members = {node: [node] for node in range(g.node_count)}
    node_community = list(range(g.node_count))

    trace = []
    previous_best = None
    pass_number = 0
    while True:
        pass_number += 1
        taken = set()
        merges = []
        for absorber in sorted(members):
            if absorber in taken:
                continue
            absorbed, average = _best_candidate(absorber, members, node_community, adjacency, taken)
            if absorbed is None:
                continue
            merges.append((absorber, absorbed, average))
            taken.update((absorber, absorbed))

        if not merges:
            trace.append(
                PassRecord(pass_number=pass_number, merges=[], applied=False, communities=len(members), stop_reason=STOP_NO_MERGE)
            )
            break

        pass_best = max(average for _, _, average in merges)
        record_merges = [Merge(absorber=a, absorbed=b, average=float(avg)) for a, b, avg in merges]
        if previous_best is not None and pass_best < previous_best:
            trace.append(
                PassRecord(
                    pass_number=pass_number,
                    merges=record_merges,
                    best_average=float(pass_best),
                    applied=False,
                    communities=len(members),
                    stop_reason=STOP_AVERAGE_DECREASED,
                )
            )
            break

        for absorber, absorbed, _ in merges:
            for node in members[absorbed]:
                node_community[node] = absorber
            members[absorber].extend(members.pop(absorbed))
        _check_partition(members, g.node_count)

        previous_best = pass_best
        trace.append(
            PassRecord(
                pass_number=pass_number,
                merges=record_merges,
                best_average=float(pass_best),
                applied=True,
                communities=len(members),
            )
        )
        logger.debug(
            "WABCD pass applied",
            extra={"pass_number": pass_number, "merges": len(merges), "communities": len(members)},
        )

    partition = Partition.from_groups(members.values(), g.node_count)
    logger.info(
        "WABCD finished",
        extra={"passes": len(trace), "communities": partition.community_count, "stop_reason": trace[-1].stop_reason},
    )
    return partition, trace
