# Builds the weighted, undirected ingredient co-occurrence network (InN).
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr

from src.utils.logger import get_logger

logger = get_logger(__name__)


class InGraph(BaseModel):
    """
    Ingredient network with dense integer node ids.

    Node ids follow lexicographic ingredient-name order, so the same name set always
    gets the same ids. `graph` is a frozen networkx.Graph whose edges carry an
    integer `weight` (number of recipes in which both ingredients appear).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    names: tuple[str, ...]
    graph: nx.Graph
    _index: dict = PrivateAttr(default_factory=dict)

    def model_post_init(self, context):
        self._index = {name: node for node, name in enumerate(self.names)}

    @property
    def node_count(self):
        return self.graph.number_of_nodes()

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def node_id(self, name):
        return self._index[name]

    def name(self, node):
        return self.names[node]

    def __contains__(self, name):
        return name in self._index

    def weight(self, u, v):
        """Weight between two ingredient names (0 when they never co-occur)."""
        if u not in self._index or v not in self._index:
            return 0
        data = self.graph.get_edge_data(self._index[u], self._index[v])
        return data["weight"] if data else 0

    def weighted_edges(self):
        """Yield (u, v, weight) node-id triples with u < v, sorted."""
        for u, v, weight in sorted((min(a, b), max(a, b), w) for a, b, w in self.graph.edges(data="weight")):
            yield u, v, weight

    def named_edges(self):
        """Yield (name_u, name_v, weight) with name_u < name_v, sorted by names."""
        rows = []
        for u, v, weight in self.graph.edges(data="weight"):
            a, b = sorted((self.names[u], self.names[v]))
            rows.append((a, b, weight))
        return sorted(rows)

    def total_weight(self):
        return sum(weight for _, _, weight in self.graph.edges(data="weight"))


def from_weighted_pairs(names, pair_weights):
    """Create an InGraph from ingredient names and a {(name_u, name_v): weight} mapping."""
    ordered = tuple(sorted(set(names)))
    index = {name: node for node, name in enumerate(ordered)}

    graph = nx.Graph()
    graph.add_nodes_from(range(len(ordered)))
    for (u, v), weight in pair_weights.items():
        if u == v:
            raise ValueError(f"self-loop on '{u}' is not allowed")
        if weight < 1 or int(weight) != weight:
            raise ValueError(f"edge weight for ({u}, {v}) must be a positive integer, got {weight}")
        a, b = index[u], index[v]
        current = graph.get_edge_data(a, b, default={"weight": 0})["weight"]
        graph.add_edge(a, b, weight=current + int(weight))
    return InGraph(names=ordered, graph=nx.freeze(graph))


def _count_pairs(recipes):
    counts = Counter()
    for recipe in recipes:
        # Each unordered pair counts once per recipe
        counts.update(combinations(sorted(recipe.ingredients), 2))
    return counts


def build_network(recipes, threads=1):
    """
    One node per distinct ingredient; every unordered ingredient pair inside a recipe adds
    exactly 1 to that pair's edge weight. Recipes with fewer than two ingredients add nodes only.
    """
    recipes = list(recipes)
    names = {name for recipe in recipes for name in recipe.ingredients}

    if threads > 1 and len(recipes) > threads:
        chunk = -(-len(recipes) // threads)
        chunks = [recipes[start:start + chunk] for start in range(0, len(recipes), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pair_counts = sum(pool.map(_count_pairs, chunks), Counter())
    else:
        pair_counts = _count_pairs(recipes)

    network = from_weighted_pairs(names, pair_counts)
    logger.info(
        "Ingredient network built",
        extra={"recipes": len(recipes), "nodes": network.node_count, "edges": network.edge_count},
    )
    return network


def induced_subgraph(g, keep):
    """
    Restrict g to the ingredient names in keep, preserving weights.
    Names absent from g are ignored and counted in a warning.
    """
    keep = set(keep)
    missing = sorted(name for name in keep if name not in g)
    if missing:
        logger.warning(
            "Names missing from the network were ignored",
            extra={"missing_names": len(missing)},
        )

    present = keep - set(missing)
    pairs = {
        (g.names[u], g.names[v]): weight
        for u, v, weight in g.graph.edges(data="weight")
        if g.names[u] in present and g.names[v] in present
    }
    return from_weighted_pairs(present, pairs)
