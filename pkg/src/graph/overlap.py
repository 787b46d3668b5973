# Run this script in terminal: python3 -m src.graph.overlap Bread,Dessert,Drink
# Ingredient overlap between recipe categories (Venn-style region counts).
# Every ingredient lands in exactly one region: the set of categories that use it.
import sys
from itertools import combinations

from src.utils.logger import get_logger

logger = get_logger(__name__)

MIN_OVERLAP_SETS = 2
MAX_OVERLAP_SETS = 6
REGION_SEPARATOR = " & "


def category_ingredients(recipes, category):
    """Union of ingredient sets over recipes carrying exactly this category label."""
    names = set()
    for recipe in recipes:
        if recipe.category == category:
            names.update(recipe.ingredients)
    return names


def overlap_regions(sets):
    """
    Count, for every non-empty subset of labels, the ingredients that belong to exactly
    that subset. Keys are label tuples in input order; all 2^k - 1 regions are present.
    """
    if not MIN_OVERLAP_SETS <= len(sets) <= MAX_OVERLAP_SETS:
        raise ValueError(
            f"overlap needs between {MIN_OVERLAP_SETS} and {MAX_OVERLAP_SETS} sets, got {len(sets)}"
        )
    labels = [label for label, _ in sets]
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate labels in overlap input: {labels}")

    # Empty regions stay in the output with a zero count
    regions = {
        subset: 0
        for size in range(1, len(labels) + 1)
        for subset in combinations(labels, size)
    }
    universe = set().union(*(members for _, members in sets))
    for name in universe:
        # Signature keeps input label order, matching the region keys
        signature = tuple(label for label, members in sets if name in members)
        regions[signature] += 1

    logger.info("Overlap regions counted", extra={"sets": len(sets), "union_size": len(universe)})
    return regions


def region_label(signature):
    return REGION_SEPARATOR.join(signature)


if __name__ == "__main__":
    from src.synthetic.mock_recipe_generator import generate_normalized_corpus

    chosen = sys.argv[1].split(",") if len(sys.argv) > 1 else ["Bread", "Dessert", "Drink"]
    corpus = generate_normalized_corpus(seed=0, n_recipes=200)
    counts = overlap_regions([(label, category_ingredients(corpus, label)) for label in chosen])
    for signature, count in counts.items():
        print(f"{region_label(signature)}\t{count}")
