# Record shapes for the corpus and extraction stages.
# They determine how a recipe looks after parsing and after ingredient normalization.
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

# Column order shared by the JSONL keys and the CSV header
RECIPE_FIELDS = [
    "id",
    "title",
    "cuisine",
    "category",
    "prep_time_minutes",
    "ingredient_lines",
    "instructions",
]

# Sub-delimiter for ingredient lines inside a single CSV cell
INGREDIENT_LINE_DELIMITER = "|"


class RawRecipe(BaseModel):
    """One recipe as read from the corpus file, quantities still inside the ingredient lines."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    title: str
    cuisine: Optional[str] = None
    category: Optional[str] = None
    prep_time_minutes: Optional[int] = Field(default=None, ge=0)
    ingredient_lines: tuple[str, ...] = Field(min_length=1)
    instructions: Optional[str] = None

    @field_validator("id")
    @classmethod
    def id_not_blank(cls, value):
        if not value.strip():
            raise ValueError("id must be non-empty")
        return value

    @field_validator("cuisine", "category")
    @classmethod
    def label_not_blank(cls, value):
        if value is not None and not value.strip():
            raise ValueError("labels must be non-empty when present")
        return value

    @field_validator("ingredient_lines")
    @classmethod
    def lines_not_blank(cls, value):
        for line in value:
            if not line.strip():
                raise ValueError("ingredient lines must be non-empty")
        return value


class Recipe(RawRecipe):
    """A RawRecipe plus its normalized ingredient names."""

    ingredients: frozenset[str] = frozenset()
    # Set when no ingredient line produced a name
    flagged: bool = False

    @field_validator("ingredients")
    @classmethod
    def names_normalized(cls, value):
        for name in value:
            if not name or name != name.lower() or " ".join(name.split()) != name:
                raise ValueError(f"ingredient name {name!r} is not normalized")
        return value

    @field_serializer("ingredients")
    def sorted_ingredients(self, value):
        return sorted(value)


class CorpusSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    recipe_count: int = 0
    per_cuisine_counts: dict[str, int] = Field(default_factory=dict)
    per_category_counts: dict[str, int] = Field(default_factory=dict)
    # Recipes without a category label
    unclassified_count: int = 0
    # Recipes without a cuisine label
    cuisine_unclassified_count: int = 0
