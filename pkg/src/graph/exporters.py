# Serializes the ingredient network and its degree histograms for external tools and plotting.
import io

import networkx as nx
import pandas as pd

from src.utils.logger import get_logger

logger = get_logger(__name__)


def to_named_graph(g):
    """Copy of the network keyed by ingredient name, nodes and edges in sorted order."""
    named = nx.Graph()
    named.add_nodes_from(g.names)
    named.add_weighted_edges_from(g.named_edges())
    return named


def edge_list_tsv(g):
    """One `name_u<TAB>name_v<TAB>weight` line per unordered edge, u < v, sorted by u then v."""
    return "".join(f"{u}\t{v}\t{weight}\n" for u, v, weight in g.named_edges())


def to_dot(g):
    named = to_named_graph(g)
    dot = nx.drawing.nx_pydot.to_pydot(named)
    dot.set_name("InN")
    return dot.to_string()


def to_graphml(g):
    buffer = io.BytesIO()
    nx.write_graphml(to_named_graph(g), buffer, encoding="utf-8")
    return buffer.getvalue().decode("utf-8")


def histogram_csv(hist):
    """Two-column CSV (degree, count) ready for plotting."""
    column = "nodes_with_degree_at_least" if hist.cumulative else "count"
    frame = pd.DataFrame(sorted(hist.entries.items()), columns=["degree", column])
    return frame.to_csv(index=False, lineterminator="\n")


def export_network(g, fmt):
    """Render the network in one of the supported export formats (tsv, dot, graphml)."""
    renderers = {"tsv": edge_list_tsv, "dot": to_dot, "graphml": to_graphml}
    if fmt not in renderers:
        raise ValueError(f"unknown export format '{fmt}'; valid formats: {', '.join(renderers)}")
    text = renderers[fmt](g)
    logger.debug("Network rendered", extra={"format": fmt, "bytes": len(text)})
    return text
