# Run this script in terminal: python3 -m src.community.partition
# Total, non-overlapping assignment of graph nodes to communities, plus its JSON and TSV renderings.
from pydantic import BaseModel, ConfigDict

from src.utils.errors import PartitionError


def _check_contiguous(assignment):
    if not assignment:
        return
    ids = set(assignment)
    if ids != set(range(len(ids))):
        raise PartitionError(f"community ids must be contiguous from 0, got {sorted(ids)}")


class Partition(BaseModel):
    """
    assignment[node_id] is the community id of that node.

    Community ids are dense (0..k-1) and numbered in order of each community's
    smallest node id, so equal groupings always produce equal partitions.
    """

    model_config = ConfigDict(frozen=True)

    assignment: tuple[int, ...]

    def __init__(self, assignment, **data):
        # Raised as PartitionError here, outside pydantic validation
        assignment = tuple(assignment)
        _check_contiguous(assignment)
        super().__init__(assignment=assignment, **data)

    @classmethod
    def from_groups(cls, groups, node_count):
        """Build a partition from an iterable of node-id collections covering 0..node_count-1."""
        groups = [sorted(group) for group in groups if group]
        assignment = [None] * node_count
        # Communities are numbered by their smallest member
        for community, group in enumerate(sorted(groups, key=lambda members: members[0])):
            for node in group:
                if not 0 <= node < node_count:
                    raise PartitionError(f"node {node} is outside the graph (0..{node_count - 1})")
                if assignment[node] is not None:
                    raise PartitionError(f"node {node} appears in more than one community")
                assignment[node] = community
        missing = [node for node, value in enumerate(assignment) if value is None]
        if missing:
            raise PartitionError(f"partition is not total; {len(missing)} nodes unassigned (first: {missing[0]})")
        return cls(tuple(assignment))

    @classmethod
    def from_mapping(cls, mapping, node_count):
        """Build a partition from {node id: any community label}."""
        # Labels only group nodes; their values never reach the partition
        groups = {}
        for node, label in mapping.items():
            groups.setdefault(label, []).append(node)
        return cls.from_groups(groups.values(), node_count)

    @classmethod
    def singletons(cls, node_count):
        return cls(tuple(range(node_count)))

    @property
    def node_count(self):
        return len(self.assignment)

    @property
    def community_count(self):
        return len(set(self.assignment))

    def communities(self):
        """Member node ids per community, indexed by community id."""
        groups = [[] for _ in range(self.community_count)]
        for node, community in enumerate(self.assignment):
            groups[community].append(node)
        return groups

    def sizes(self):
        return [len(members) for members in self.communities()]


def partition_to_json(p, g):
    """{community id: sorted ingredient names}, ordered by community id."""
    return {
        str(community): sorted(g.names[node] for node in members)
        for community, members in enumerate(p.communities())
    }


def partition_to_tsv(p, g):
    rows = sorted((g.names[node], community) for node, community in enumerate(p.assignment))
    return "".join(f"{name}\t{community}\n" for name, community in rows)


if __name__ == "__main__":
    from src.graph.network import from_weighted_pairs

    demo = from_weighted_pairs(
        ["chili", "cumin", "garlic", "milk", "sugar"],
        {("chili", "cumin"): 2, ("cumin", "garlic"): 1, ("milk", "sugar"): 3},
    )
    # Group labels are arbitrary; ids get renumbered by smallest member
    p = Partition.from_mapping({0: "spice", 1: "spice", 2: "spice", 3: "sweet", 4: "sweet"}, demo.node_count)
    print(p.assignment, p.sizes())
    print(partition_to_json(p, demo))
    print(partition_to_tsv(p, demo), end="")
