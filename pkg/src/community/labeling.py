# Labels communities with the recipe category they overlap most and compares detectors side by side.
from typing import Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.community.modularity import modularity
from src.graph.network import induced_subgraph
from src.graph.overlap import category_ingredients
from src.utils.errors import PartitionError
from src.utils.logger import get_logger

logger = get_logger(__name__)

MISSING_CELL = "-"


class CommunityLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    community_id: int
    size: int
    best_label: str
    score: float = Field(ge=0, le=1)
    scores: dict[str, float]


class CommunityLabeling(BaseModel):
    model_config = ConfigDict(frozen=True)

    per_community: list[CommunityLabel]


class AlgorithmSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithm: str
    community_count: int
    sizes: list[int]
    modularity: Optional[float] = None
    labeling: Optional[CommunityLabeling] = None


class CompareReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithms: list[AlgorithmSummary]

    def matrix(self):
        """Rows C1..Cmax, one column per algorithm, cells = best category or '-'."""
        row_count = max((summary.community_count for summary in self.algorithms), default=0)
        columns = {}
        for summary in self.algorithms:
            labels = [entry.best_label for entry in summary.labeling.per_community] if summary.labeling else []
            cells = []
            for row in range(row_count):
                if row >= summary.community_count:
                    cells.append(MISSING_CELL)
                elif labels:
                    cells.append(labels[row])
                else:
                    cells.append(f"size {summary.sizes[row]}")
            columns[summary.algorithm] = cells
        return pd.DataFrame(columns, index=[f"C{row + 1}" for row in range(row_count)])

    def render_table(self):
        frame = self.matrix()
        if frame.empty:
            return "(no communities)\n"
        return frame.to_string() + "\n"


def label_communities(p, category_sets, g):
    """
    Score every community against every category as |community ∩ category| / |community|.
    The best label is the highest score, ties going to the lexicographically smallest label.
    """
    if not category_sets:
        raise ValueError("label_communities needs at least one category set")
    if p.node_count != g.node_count:
        raise PartitionError(f"partition covers {p.node_count} nodes but the graph has {g.node_count}")

    per_community = []
    for community, members in enumerate(p.communities()):
        names = {g.names[node] for node in members}
        scores = {label: len(names & set(ingredients)) / len(names) for label, ingredients in category_sets}
        best = min(scores, key=lambda label: (-scores[label], label))
        per_community.append(
            CommunityLabel(
                community_id=community,
                size=len(names),
                best_label=best,
                score=scores[best],
                scores=dict(sorted(scores.items())),
            )
        )
    return CommunityLabeling(per_community=per_community)


def category_sets_from_recipes(recipes, categories=None):
    """(label, ingredient set) for the requested categories, or every category in the corpus."""
    if categories is None:
        categories = sorted({recipe.category for recipe in recipes if recipe.category is not None})
    return [(label, category_ingredients(recipes, label)) for label in categories]


def category_subgraphs(recipes, g, categories=None):
    """Induced subgraph of the network per recipe category."""
    return {label: induced_subgraph(g, names) for label, names in category_sets_from_recipes(recipes, categories)}


def compare_partitions(results, category_sets, g):
    """
    Summarize each (algorithm name, Partition) over the same graph: community count,
    sizes, modularity and category labeling.
    """
    summaries = []
    for name, partition in results:
        if partition.node_count != g.node_count:
            raise PartitionError(
                f"partition '{name}' covers {partition.node_count} nodes but the graph has {g.node_count}"
            )
        summaries.append(
            AlgorithmSummary(
                algorithm=name,
                community_count=partition.community_count,
                sizes=partition.sizes(),
                modularity=modularity(g, partition) if g.edge_count else None,
                labeling=label_communities(partition, category_sets, g) if category_sets else None,
            )
        )
    if not category_sets:
        logger.warning("No recipe categories available; communities left unlabeled")

    report = CompareReport(algorithms=summaries)
    logger.info(
        "Partitions compared",
        extra={"algorithms": ",".join(summary.algorithm for summary in summaries)},
    )
    return report
