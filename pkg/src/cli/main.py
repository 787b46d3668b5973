# Run the CLI from the project root: python3 -m src.cli.main --help
import sys
from functools import wraps
from pathlib import Path

import click

from src.cli import commands
from src.graph.overlap import MAX_OVERLAP_SETS, MIN_OVERLAP_SETS
from src.utils.config_loader import ALGORITHMS, EXPORT_FORMATS, load_run_config
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _split_list(value):
    if value is None:
        return None
    return tuple(part.strip() for part in value.split(",") if part.strip())


def _parse_algorithms(ctx, param, value):
    names = _split_list(value)
    if names is None:
        return None
    unknown = [name for name in names if name not in ALGORITHMS]
    if unknown or not names:
        raise click.BadParameter(
            f"unknown algorithm {', '.join(unknown) or '(none given)'}; valid names: {', '.join(ALGORITHMS)}"
        )
    return names


def _parse_exports(ctx, param, value):
    formats = _split_list(value)
    if formats is None:
        return None
    unknown = [fmt for fmt in formats if fmt not in EXPORT_FORMATS]
    if unknown:
        raise click.BadParameter(f"unknown export format {', '.join(unknown)}; valid formats: {', '.join(EXPORT_FORMATS)}")
    return formats


def _parse_categories(ctx, param, value):
    return _split_list(value)


def _parse_overlap_categories(ctx, param, value):
    labels = _split_list(value) or ()
    if not MIN_OVERLAP_SETS <= len(labels) <= MAX_OVERLAP_SETS:
        raise click.BadParameter(
            f"give between {MIN_OVERLAP_SETS} and {MAX_OVERLAP_SETS} categories, got {len(labels)}"
        )
    return labels


def common_options(func):
    options = [
        click.option("--input", "input_path", type=click.Path(path_type=Path), help="Recipe corpus file."),
        click.option("--stopwords", "stopwords_path", type=click.Path(path_type=Path), help="Stop-word file."),
        click.option("--out", "output_dir", type=click.Path(path_type=Path), help="Output directory."),
        click.option("--force", is_flag=True, help="Overwrite existing artifacts."),
        click.option("--threads", type=click.IntRange(min=1), help="Worker threads (default: all CPUs)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


input_format_option = click.option(
    "--format", "input_format", type=click.Choice(["jsonl", "csv"]), help="Input corpus format."
)
community_options = [
    click.option("--algos", "algorithms", callback=_parse_algorithms, help="Comma list: wabcd,louvain."),
    click.option("--seed", "louvain_seed", type=int, help="Louvain seed."),
    click.option("--resolution", "louvain_resolution", type=click.FloatRange(min=0, min_open=True), help="Louvain resolution."),
]


def _with_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func
    return decorator


def run_stage(stage):
    """Build the RunConfig from flags, run the stage, and turn failures into exit status 1."""

    def decorator(func):
        @wraps(func)
        def wrapper(**flags):
            flags["force"] = flags.get("force") or None
            try:
                config = load_run_config(**flags)
                written = stage(config)
            except (ValueError, OSError) as e:
                logger.error("Stage failed", extra={"stage": func.__name__, "error": str(e)})
                click.echo(f"error: {e}", err=True)
                sys.exit(1)
            for path in written:
                click.echo(str(path))

        return wrapper

    return decorator


@click.group()
def cli():
    """Ingredient network toolkit: recipes -> ingredient co-occurrence network -> communities."""


@cli.command("extract")
@common_options
@input_format_option
@run_stage(commands.cmd_extract)
def extract_command(flags):
    """Normalize ingredient lines into ingredient names."""


@cli.command("graph")
@common_options
@click.option("--format", "export_formats", callback=_parse_exports, help="Comma list: tsv,dot,graphml.")
@run_stage(commands.cmd_graph)
def graph_command(flags):
    """Build the ingredient network and export it."""


@cli.command("stats")
@common_options
@run_stage(commands.cmd_stats)
def stats_command(flags):
    """Compute network statistics and degree histograms."""


@cli.command("communities")
@common_options
@_with_options(community_options)
@click.option("--categories", callback=_parse_categories, help="Restrict labeling to these categories.")
@run_stage(commands.cmd_communities)
def communities_command(flags):
    """Detect, label and compare ingredient communities."""


@cli.command("overlap")
@common_options
@click.option("--categories", required=True, callback=_parse_overlap_categories, help="2 to 6 comma-separated categories.")
@run_stage(commands.cmd_overlap)
def overlap_command(flags):
    """Count ingredients shared between recipe categories."""


@cli.command("all")
@common_options
@input_format_option
@_with_options(community_options)
@click.option("--export", "export_formats", callback=_parse_exports, help="Comma list: tsv,dot,graphml.")
@click.option("--categories", callback=_parse_categories, help="Categories for labeling and overlap.")
@run_stage(commands.cmd_all)
def all_command(flags):
    """Run extract, graph, stats, communities (and overlap when categories are given)."""


if __name__ == "__main__":
    cli()
