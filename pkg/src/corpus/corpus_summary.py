# Run this script in terminal: python3 -m src.corpus.corpus_summary 40
# Per-cuisine and per-category recipe counts written as corpus_summary.json by the extract stage.
import sys
from collections import Counter

from src.corpus.schema_definitions import CorpusSummary
from src.utils.logger import get_logger

logger = get_logger(__name__)


def summarize_corpus(recipes):
    """Count recipes per cuisine and per category; missing labels go to the unclassified buckets."""
    # A missing label is None; an empty string never survives parsing
    cuisines = Counter(recipe.cuisine for recipe in recipes if recipe.cuisine is not None)
    categories = Counter(recipe.category for recipe in recipes if recipe.category is not None)

    # dicts are key-sorted so the JSON artifact is stable across runs
    summary = CorpusSummary(
        recipe_count=len(recipes),
        per_cuisine_counts=dict(sorted(cuisines.items())),
        per_category_counts=dict(sorted(categories.items())),
        unclassified_count=len(recipes) - sum(categories.values()),
        cuisine_unclassified_count=len(recipes) - sum(cuisines.values()),
    )
    logger.info(
        "Corpus summarized",
        extra={
            "recipes": summary.recipe_count,
            "categories": len(summary.per_category_counts),
            "unclassified": summary.unclassified_count,
        },
    )
    return summary


if __name__ == "__main__":
    from src.synthetic.mock_recipe_generator import generate_normalized_corpus

    n_recipes = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    print(summarize_corpus(generate_normalized_corpus(seed=0, n_recipes=n_recipes)).model_dump_json(indent=2))
