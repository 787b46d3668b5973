# Run this script in terminal: python3 -m src.extract.ingredient_extractor "2 tbsp chopped coriander"
# Turns raw ingredient lines into clean ingredient names by dropping numbers and stop words.
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from pydantic import BaseModel, ConfigDict

from src.corpus.schema_definitions import Recipe
from src.extract.stopwords import StopWordSet
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Whitespace and punctuation separate tokens; '.' is kept inside tokens so "1.5" stays one number
_SEPARATORS = re.compile(r"[^\w.]+|_")
# "2kg" -> "2", "kg" and "kg2" -> "kg", "2"
_DIGIT_LETTER_BOUNDARY = re.compile(r"(?<=\d)(?=[^\W\d_])|(?<=[^\W\d_])(?=\d)")

REASON_ALL_FILTERED = "all_tokens_filtered"
REASON_NO_INGREDIENTS = "no_ingredients"


class ExtractionLogEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    line: str
    reason: str


def tokenize(line):
    """Lowercase a line and split it on whitespace and punctuation, dropping empty tokens."""
    tokens = []
    for piece in _SEPARATORS.split(line.lower()):
        piece = piece.strip(".")
        if piece:
            tokens.append(piece)
    return tokens


def split_quantity_units(tokens):
    split = []
    for token in tokens:
        for piece in _DIGIT_LETTER_BOUNDARY.split(token):
            piece = piece.strip(".")
            if piece:
                split.append(piece)
    return split


def is_numeric_token(token):
    # Digits, decimal points and unicode fractions such as "½"
    return any(ch.isnumeric() for ch in token) and all(ch.isnumeric() or ch == "." for ch in token)


def extract_ingredient(line, sws):
    """Return the ingredient name left after dropping numbers and stop words, or None."""
    survivors = [
        token
        for token in split_quantity_units(tokenize(line))
        if not is_numeric_token(token) and token not in sws
    ]
    if not survivors:
        return None
    return " ".join(survivors)


def _extract_recipe(recipe, sws):
    names = set()
    log = []
    for line in recipe.ingredient_lines:
        name = extract_ingredient(line, sws)
        if name is None:
            log.append(ExtractionLogEntry(id=recipe.id, line=line, reason=REASON_ALL_FILTERED))
        else:
            names.add(name)

    flagged = not names
    if flagged:
        log.append(ExtractionLogEntry(id=recipe.id, line="", reason=REASON_NO_INGREDIENTS))

    normalized = Recipe(**recipe.model_dump(), ingredients=frozenset(names), flagged=flagged)
    return normalized, log


def extract_corpus(recipes, sws, threads=1):
    """
    Normalize every recipe's ingredient lines.

    Returns (list of Recipe in input order, list of ExtractionLogEntry). Recipes whose
    ingredient set ends up empty are kept with flagged=True.
    """
    if not isinstance(sws, StopWordSet):
        raise TypeError("sws must be a StopWordSet")

    if threads > 1 and len(recipes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda recipe: _extract_recipe(recipe, sws), recipes))
    else:
        results = [_extract_recipe(recipe, sws) for recipe in recipes]

    normalized = [recipe for recipe, _ in results]
    extraction_log = [entry for _, entries in results for entry in entries]

    flagged_count = sum(1 for recipe in normalized if recipe.flagged)
    if flagged_count:
        logger.warning("Recipes left without ingredients", extra={"flagged_recipes": flagged_count})
    logger.info(
        "Ingredient extraction completed",
        extra={
            "recipes": len(normalized),
            "dropped_lines": sum(1 for entry in extraction_log if entry.reason == REASON_ALL_FILTERED),
            "distinct_ingredients": len({name for recipe in normalized for name in recipe.ingredients}),
        },
    )
    return normalized, extraction_log


if __name__ == "__main__":
    demo_sws = StopWordSet(frozenset({"cup", "tbsp", "chopped", "kg"}))
    for raw_line in sys.argv[1:] or ["2 tbsp chopped coriander", "1/2 cup sugar", "3 kg"]:
        print(f"{raw_line!r} -> {extract_ingredient(raw_line, demo_sws)!r}")
