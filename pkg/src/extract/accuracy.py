# Scores extracted ingredient names against hand-annotated gold sets, grouped per cuisine.
import json

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.corpus.recipe_parser import read_text, split_records
from src.utils.errors import GoldAnnotationError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class GroupAccuracy(BaseModel):
    model_config = ConfigDict(frozen=True)

    avg: float = Field(ge=0, le=1)
    min: float = Field(ge=0, le=1)
    max: float = Field(ge=0, le=1)


class AccuracyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    per_recipe: list[tuple[str, float]]
    per_group: dict[str, GroupAccuracy]


class GoldAnnotation(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    ingredients: frozenset[str]
    group: str = Field(min_length=1)


def load_gold_annotations(source):
    """Read gold JSONL (id, ingredients, group) into (gold sets, grouping)."""
    gold = {}
    grouping = {}
    for line_number, line in split_records(read_text(source)):
        if not line.strip():
            continue
        try:
            annotation = GoldAnnotation.model_validate(json.loads(line))
        except (json.JSONDecodeError, ValueError) as e:
            raise GoldAnnotationError(f"gold annotation line {line_number}: {e}")
        if annotation.id in gold:
            raise GoldAnnotationError(f"gold annotation line {line_number}: duplicate id '{annotation.id}'")
        gold[annotation.id] = set(annotation.ingredients)
        grouping[annotation.id] = annotation.group
    return gold, grouping


def score_extraction(predicted, gold, grouping):
    """
    Per-recipe accuracy is |predicted ∩ gold| / |gold| with exact string matching;
    groups report the mean, min and max over their recipes.
    """
    per_recipe = []
    rows = []
    for recipe_id in sorted(gold):
        gold_names = set(gold[recipe_id])
        if not gold_names:
            raise GoldAnnotationError(f"gold set for recipe '{recipe_id}' is empty")
        if recipe_id not in predicted:
            raise GoldAnnotationError(f"recipe '{recipe_id}' has gold annotations but no prediction")

        accuracy = len(set(predicted[recipe_id]) & gold_names) / len(gold_names)
        per_recipe.append((recipe_id, accuracy))
        rows.append({"group": grouping.get(recipe_id, "ungrouped"), "accuracy": accuracy})

    per_group = {}
    if rows:
        summary = pd.DataFrame(rows).groupby("group", sort=True)["accuracy"].agg(["mean", "min", "max"])
        for label, row in summary.iterrows():
            low, high = float(row["min"]), float(row["max"])
            # keep min <= avg <= max under float rounding
            per_group[str(label)] = GroupAccuracy(avg=min(max(float(row["mean"]), low), high), min=low, max=high)
    logger.info(
        "Extraction accuracy scored",
        extra={"recipes": len(per_recipe), "groups": len(per_group)},
    )
    return AccuracyReport(per_recipe=per_recipe, per_group=per_group)
