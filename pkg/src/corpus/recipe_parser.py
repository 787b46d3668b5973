# Run this script in the terminal using: python3 -m src.corpus.recipe_parser <file>
# Parses recipe corpora (JSON Lines or CSV) into validated RawRecipe records and writes them back.
import csv
import io
import json
import re
import sys

import pandas as pd
from pydantic import ValidationError

from src.corpus.schema_definitions import INGREDIENT_LINE_DELIMITER, RECIPE_FIELDS, RawRecipe, Recipe
from src.utils.config_loader import RecipeFormat
from src.utils.errors import DuplicateRecipeError, RecipeParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

_OPTIONAL_TEXT_FIELDS = ["cuisine", "category", "instructions"]


def read_text(source):
    # Accept raw bytes or any binary stream
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise RecipeParseError(f"input is not valid UTF-8 ({e.reason} at byte {e.start})")


# Records are separated by "\n" only (an optional "\r" before it is dropped).
# U+2028, U+2029 and U+0085 are ordinary text inside a record.
def split_records(text):
    for line_number, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        yield line_number, line


def _validation_message(error):
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "record"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


# Canonicalize one record (strip text, fold empty optionals to None) before validation
def canonicalize_record(record, line_number):
    if not isinstance(record, dict):
        raise RecipeParseError(f"expected a JSON object, got {type(record).__name__}", line_number)

    unknown = sorted(set(record) - set(RECIPE_FIELDS))
    if unknown:
        raise RecipeParseError(f"unknown keys {unknown}", line_number)

    canonical = dict(record)
    if isinstance(canonical.get("id"), str):
        canonical["id"] = canonical["id"].strip()
    if isinstance(canonical.get("title"), str):
        canonical["title"] = canonical["title"].strip()

    lines = canonical.get("ingredient_lines")
    if lines is None:
        raise RecipeParseError(f"recipe '{canonical.get('id')}' is missing ingredient_lines", line_number)
    if not isinstance(lines, (list, tuple)):
        raise RecipeParseError("ingredient_lines must be an array of strings", line_number)
    if not lines:
        raise RecipeParseError(f"recipe '{canonical.get('id')}' has no ingredient lines", line_number)
    canonical["ingredient_lines"] = [line.strip() if isinstance(line, str) else line for line in lines]

    return canonical


def _build_recipe(record, line_number, seen_ids):
    canonical = canonicalize_record(record, line_number)
    try:
        recipe = RawRecipe.model_validate(canonical)
    except ValidationError as e:
        raise RecipeParseError(
            f"invalid recipe '{canonical.get('id')}': {_validation_message(e)}", line_number
        )

    if recipe.id in seen_ids:
        raise DuplicateRecipeError(recipe.id, line_number)
    seen_ids.add(recipe.id)
    return recipe


def _parse_jsonl(text):
    recipes = []
    seen_ids = set()
    for line_number, line in split_records(text):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise RecipeParseError(f"malformed JSON ({e.msg})", line_number)
        recipes.append(_build_recipe(record, line_number, seen_ids))
    return recipes


# Physical line on which each data record starts. Rows pandas skips as blank are skipped
# here too, so the list lines up with the frame.
def _record_start_lines(text):
    reader = csv.reader(io.StringIO(text, newline=""))
    starts = []
    previous_end = 0
    for row in reader:
        start = previous_end + 1
        previous_end = reader.line_num
        if len(row) <= 1 and not "".join(row).strip():
            continue
        starts.append(start)
    return starts[1:]


def _parse_csv(text):
    if not text.strip():
        return []
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            dtype=str,
            keep_default_na=False,
            na_filter=False,
            on_bad_lines="error",
        )
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise RecipeParseError(f"malformed CSV ({e})", int(match.group(1)) if match else None)

    if list(frame.columns) != RECIPE_FIELDS:
        raise RecipeParseError(
            f"CSV header must be {','.join(RECIPE_FIELDS)}, got {','.join(map(str, frame.columns))}", 1
        )

    try:
        start_lines = _record_start_lines(text)
    except csv.Error:
        start_lines = []

    recipes = []
    seen_ids = set()
    for position, row in enumerate(frame.to_dict(orient="records")):
        line_number = start_lines[position] if position < len(start_lines) else None
        record = {"id": row["id"], "title": row["title"]}
        for field in _OPTIONAL_TEXT_FIELDS:
            value = row[field].strip()
            record[field] = value or None

        prep_time = row["prep_time_minutes"].strip()
        if prep_time:
            if not (prep_time.isascii() and prep_time.isdigit()):
                raise RecipeParseError(f"prep_time_minutes must be a non-negative integer, got {prep_time!r}", line_number)
            record["prep_time_minutes"] = int(prep_time)

        cell = row["ingredient_lines"]
        record["ingredient_lines"] = [part for part in cell.split(INGREDIENT_LINE_DELIMITER)] if cell.strip() else []
        recipes.append(_build_recipe(record, line_number, seen_ids))
    return recipes


def parse_recipe_file(source, fmt=RecipeFormat.JSONL):
    """
    Parse a UTF-8 recipe corpus into RawRecipe records, input order preserved.

    Raises RecipeParseError (with line number) for malformed records and empty
    ingredient lists, DuplicateRecipeError for a repeated id.
    """
    fmt = RecipeFormat(fmt)
    text = read_text(source)
    recipes = _parse_jsonl(text) if fmt is RecipeFormat.JSONL else _parse_csv(text)
    logger.info("Parsed recipe corpus", extra={"format": fmt.value, "recipes": len(recipes)})
    return recipes


def parse_normalized_recipes(source):
    """Read the Recipe JSONL written by the extraction stage."""
    recipes = []
    seen_ids = set()
    for line_number, line in split_records(read_text(source)):
        if not line.strip():
            continue
        try:
            recipe = Recipe.model_validate_json(line)
        except ValidationError as e:
            raise RecipeParseError(f"invalid normalized recipe: {_validation_message(e)}", line_number)
        if recipe.id in seen_ids:
            raise DuplicateRecipeError(recipe.id, line_number)
        seen_ids.add(recipe.id)
        recipes.append(recipe)
    return recipes


def recipe_to_json_line(recipe):
    payload = recipe.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, ensure_ascii=False, sort_keys=True)


def write_recipe_file(recipes, fmt=RecipeFormat.JSONL):
    """Serialize recipes back to the text format parse_recipe_file reads."""
    fmt = RecipeFormat(fmt)
    if fmt is RecipeFormat.JSONL:
        return "".join(recipe_to_json_line(recipe) + "\n" for recipe in recipes)

    rows = []
    for recipe in recipes:
        for line in recipe.ingredient_lines:
            if INGREDIENT_LINE_DELIMITER in line:
                raise ValueError(
                    f"recipe '{recipe.id}' has an ingredient line containing '{INGREDIENT_LINE_DELIMITER}', "
                    "which CSV cannot represent"
                )
        row = recipe.model_dump(include=set(RECIPE_FIELDS))
        row["ingredient_lines"] = INGREDIENT_LINE_DELIMITER.join(recipe.ingredient_lines)
        rows.append(row)
    frame = pd.DataFrame(rows, columns=RECIPE_FIELDS, dtype=object)
    return frame.to_csv(index=False, lineterminator="\n")


if __name__ == "__main__":
    path = sys.argv[1]
    fmt = RecipeFormat.CSV if path.endswith(".csv") else RecipeFormat.JSONL
    with open(path, "rb") as f:
        parsed = parse_recipe_file(f, fmt)
    print(f"{len(parsed)} recipes parsed from {path}")
