# Pipeline stages behind the CLI subcommands. Each stage reads what the previous one
# left in the output directory, so every stage can be run and tested on its own.
from pathlib import Path

from src.community.labeling import category_sets_from_recipes, compare_partitions
from src.community.louvain import louvain_with_trace
from src.community.partition import partition_to_json, partition_to_tsv
from src.community.wabcd import wabcd
from src.corpus.corpus_summary import summarize_corpus
from src.corpus.recipe_parser import parse_normalized_recipes, parse_recipe_file, recipe_to_json_line
from src.extract.ingredient_extractor import extract_corpus
from src.extract.stopwords import load_stopwords
from src.graph.exporters import export_network, histogram_csv
from src.graph.network import build_network
from src.graph.network_stats import compute_stats, degree_distribution
from src.graph.overlap import MAX_OVERLAP_SETS, MIN_OVERLAP_SETS, category_ingredients, overlap_regions, region_label
from src.load.artifact_writer import ArtifactWriter
from src.load.run_manifest import record_stage, stale_inputs
from src.utils.errors import ArtifactError
from src.utils.logger import get_logger

logger = get_logger(__name__)

RECIPES_ARTIFACT = "recipes.jsonl"
EXPORT_FILE_NAMES = {
    "tsv": "edges.tsv",
    "dot": "ingredient_network.dot",
    "graphml": "ingredient_network.graphml",
}


def _require_file(path, role):
    if path is None:
        raise ValueError(f"no {role} file given")
    if not Path(path).is_file():
        raise FileNotFoundError(f"{role} file not found: {path}")
    return Path(path)


def cmd_extract(config):
    """Parse the corpus, strip numbers and stop words, write recipes.jsonl, the extraction log and the summary."""
    input_path = _require_file(config.input_path, "input")
    stopwords_path = _require_file(config.stopwords_path, "stop-word")

    with open(stopwords_path, "rb") as f:
        sws = load_stopwords(f)
    with open(input_path, "rb") as f:
        raw_recipes = parse_recipe_file(f, config.input_format)

    summary = summarize_corpus(raw_recipes)
    recipes, extraction_log = extract_corpus(raw_recipes, sws, threads=config.threads)

    writer = ArtifactWriter(config.output_dir, force=config.force)
    recipes_path = writer.write_text(RECIPES_ARTIFACT, "".join(recipe_to_json_line(r) + "\n" for r in recipes))
    writer.write_jsonl("extraction_log.jsonl", [entry.model_dump() for entry in extraction_log])
    writer.write_json("corpus_summary.json", summary.model_dump())

    record_stage(writer, "extract", {"input": input_path, "stopwords": stopwords_path})
    record_stage(writer, "extract_output", {"recipes": recipes_path})
    logger.info("Extract stage completed", extra={"recipes": len(recipes), "output_dir": str(config.output_dir)})
    return writer.written


def load_extracted_recipes(config):
    """Read recipes.jsonl from the output directory, warning when its inputs changed since extraction."""
    recipes_path = Path(config.output_dir) / RECIPES_ARTIFACT
    if not recipes_path.is_file():
        raise ArtifactError(f"{recipes_path} not found; run the extract subcommand first")

    stale_inputs(config.output_dir, "extract", {"input": config.input_path, "stopwords": config.stopwords_path})
    stale_inputs(config.output_dir, "extract_output", {"recipes": recipes_path})

    with open(recipes_path, "rb") as f:
        return parse_normalized_recipes(f)


def cmd_graph(config):
    """Build the ingredient network and write it in every requested export format."""
    recipes = load_extracted_recipes(config)
    network = build_network(recipes, threads=config.threads)

    writer = ArtifactWriter(config.output_dir, force=config.force)
    for fmt in config.export_formats:
        writer.write_text(EXPORT_FILE_NAMES[fmt], export_network(network, fmt))
    return writer.written


def cmd_stats(config):
    """Write stats.json plus plain and cumulative degree histograms (JSON and CSV)."""
    recipes = load_extracted_recipes(config)
    network = build_network(recipes, threads=config.threads)

    report = compute_stats(network)
    plain = degree_distribution(network, cumulative=False)
    cumulative = degree_distribution(network, cumulative=True)

    writer = ArtifactWriter(config.output_dir, force=config.force)
    writer.write_json("stats.json", report.model_dump(mode="json"))
    writer.write_json(
        "degree_histogram.json",
        {
            "plain": {str(k): v for k, v in plain.entries.items()},
            "cumulative": {str(k): v for k, v in cumulative.entries.items()},
        },
        sort_keys=False,
    )
    writer.write_text("degree_histogram.csv", histogram_csv(plain))
    writer.write_text("degree_histogram_cumulative.csv", histogram_csv(cumulative))
    return writer.written


def cmd_graph_and_stats(config):
    return cmd_graph(config) + cmd_stats(config)


def cmd_communities(config):
    """Run every requested detector, write one partition per algorithm plus the comparison report."""
    recipes = load_extracted_recipes(config)
    network = build_network(recipes, threads=config.threads)
    writer = ArtifactWriter(config.output_dir, force=config.force)

    results = []
    for algorithm in config.algorithms:
        if algorithm == "wabcd":
            partition, trace = wabcd(network)
            writer.write_jsonl("wabcd_trace.jsonl", [record.model_dump() for record in trace])
        elif algorithm == "louvain":
            partition, trace = louvain_with_trace(
                network, resolution=config.louvain_resolution, seed=config.louvain_seed
            )
            writer.write_jsonl("louvain_trace.jsonl", [level.model_dump() for level in trace])
        else:
            raise ValueError(f"unknown algorithm '{algorithm}'")

        writer.write_json(f"partition_{algorithm}.json", partition_to_json(partition, network), sort_keys=False)
        writer.write_text(f"partition_{algorithm}.tsv", partition_to_tsv(partition, network))
        results.append((algorithm, partition))

    categories = list(config.categories) or None
    report = compare_partitions(results, category_sets_from_recipes(recipes, categories), network)
    writer.write_json("compare_report.json", report.model_dump(mode="json"))
    writer.write_text("compare_table.txt", report.render_table())
    return writer.written


def cmd_overlap(config, categories=None):
    """Write the ingredient overlap region counts for 2 to 6 recipe categories."""
    categories = list(categories if categories is not None else config.categories)
    if not MIN_OVERLAP_SETS <= len(categories) <= MAX_OVERLAP_SETS:
        raise ValueError(
            f"overlap needs between {MIN_OVERLAP_SETS} and {MAX_OVERLAP_SETS} categories, got {len(categories)}"
        )
    recipes = load_extracted_recipes(config)
    sets = [(label, category_ingredients(recipes, label)) for label in categories]
    regions = overlap_regions(sets)

    writer = ArtifactWriter(config.output_dir, force=config.force)
    writer.write_json(
        "overlap_regions.json",
        {
            "labels": categories,
            "regions": {region_label(signature): count for signature, count in regions.items()},
            "union_size": sum(regions.values()),
        },
    )
    return writer.written


def cmd_all(config):
    written = cmd_extract(config)
    written += cmd_graph_and_stats(config)
    written += cmd_communities(config)
    if config.categories:
        written += cmd_overlap(config)
    return written
