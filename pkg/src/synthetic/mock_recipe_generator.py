# Run this script in terminal: python3 -m src.synthetic.mock_recipe_generator 40
# Generates random recipe corpora for property tests and smoke runs.
import random
import string
import sys

from src.corpus.recipe_parser import write_recipe_file
from src.corpus.schema_definitions import RawRecipe, Recipe

# Allowed values
allowed_cuisines = ["Punjabi", "Bengali", "Gujarati", "Kerala", "Rajasthani"]
allowed_categories = ["Bread", "Breakfast", "Chutney", "Dessert", "Drink", "Lunch/Dinner"]

units = ["cup", "cups", "tbsp", "tsp", "kg", "gms", "pinch", "inch"]
preparations = ["chopped", "sliced", "boiled", "grated", "split"]
ingredient_names = [
    "toor dal", "basmati rice", "onion", "tomato", "ginger", "garlic", "paneer", "ghee",
    "cumin seeds", "mustard seeds", "turmeric", "red chilli powder", "coriander leaves", "salt", "oil",
    "sugar", "milk", "curd", "wheat flour", "besan", "cardamom", "cashew", "jaggery", "tamarind",
    "coconut", "curry leaves", "green chilli", "potato", "peas", "lemon juice",
]


# Random free text: ASCII and non-ASCII letters, unicode numbers, punctuation (never the
# CSV line delimiter "|") and separators that are whitespace but not record breaks.
text_alphabet = string.ascii_letters + string.digits + "éñüÜçß食盐½¾²" + ".,;:()-/'\"!&%*+[]#"
text_separators = [" ", " ", " ", "\t", "\u00a0", "\u2028", "\u2029", "\x85"]
glued_quantities = ["2kg", "1½cups", "250gms", "3tbsp", "1.5l", "kg2"]


def ingredient_vocabulary(size):
    # Zero-padded so lexicographic order equals numeric order
    return [f"ingredient{i:04d}" for i in range(size)]


def generate_recipe_sets(rng, n_recipes, vocabulary, max_ingredients):
    """Random ingredient sets, each of size 0..max_ingredients."""
    return [
        frozenset(rng.sample(vocabulary, rng.randint(0, min(max_ingredients, len(vocabulary)))))
        for _ in range(n_recipes)
    ]


def generate_normalized_corpus(seed, n_recipes, vocabulary_size=60, max_ingredients=20):
    """Recipes with ingredient sets already normalized, for graph-level tests."""
    rng = random.Random(seed)
    vocabulary = ingredient_vocabulary(vocabulary_size)
    recipes = []
    for index, ingredients in enumerate(generate_recipe_sets(rng, n_recipes, vocabulary, max_ingredients)):
        recipes.append(
            Recipe(
                id=f"syn{index:05d}",
                title=f"Synthetic recipe {index}",
                category=rng.choice(allowed_categories),
                ingredient_lines=tuple(sorted(ingredients)) or ("water",),
                ingredients=ingredients,
                flagged=not ingredients,
            )
        )
    return recipes


def generate_ingredient_line(rng, name):
    parts = []
    if rng.random() < 0.8:
        parts.append(rng.choice(["1", "2", "1/2", "1.5", "250", "3"]))
        parts.append(rng.choice(units))
    if rng.random() < 0.4:
        parts.append(rng.choice(preparations))
    parts.append(name)
    return " ".join(parts)


def generate_raw_corpus(seed, n_recipes, vocabulary_size=30, max_ingredients=8):
    """Raw recipes with quantities and units around each ingredient name."""
    rng = random.Random(seed)
    names = ingredient_names[:vocabulary_size]
    recipes = []
    for index in range(n_recipes):
        chosen = rng.sample(names, rng.randint(1, min(max_ingredients, len(names))))
        recipes.append(
            RawRecipe(
                id=f"raw{index:05d}",
                title=f"Generated recipe {index}",
                cuisine=rng.choice(allowed_cuisines + [None]),
                category=rng.choice(allowed_categories + [None]),
                prep_time_minutes=rng.choice([None, rng.randint(0, 240)]),
                ingredient_lines=tuple(generate_ingredient_line(rng, name) for name in chosen),
                instructions=rng.choice([None, "Mix and cook."]),
            )
        )
    return recipes


def random_text(rng, max_words=6, allow_newline=False):
    """Non-empty text with no leading or trailing whitespace; "\\n" only when allow_newline."""
    separators = text_separators + ["\n"] if allow_newline else text_separators
    words = []
    for _ in range(rng.randint(1, max_words)):
        roll = rng.random()
        if roll < 0.15:
            words.append(rng.choice(glued_quantities))
        elif roll < 0.35:
            words.append(rng.choice(units + preparations))
        else:
            words.append("".join(rng.choice(text_alphabet) for _ in range(rng.randint(1, 8))))
    text = words[0]
    for word in words[1:]:
        text += rng.choice(separators) + word
    return text


def random_ingredient_lines(seed, n_lines):
    rng = random.Random(seed)
    return [random_text(rng) for _ in range(n_lines)]


def generate_random_raw_corpus(seed, n_recipes, max_ingredients=6):
    """Raw recipes whose every text field is random_text, for parser round trips."""
    rng = random.Random(seed)
    recipes = []
    for index in range(n_recipes):
        recipes.append(
            RawRecipe(
                # index prefix keeps ids unique
                id=f"{index}-{random_text(rng, max_words=2)}",
                title=random_text(rng),
                cuisine=rng.choice([None, random_text(rng, max_words=2)]),
                category=rng.choice([None, random_text(rng, max_words=2)]),
                prep_time_minutes=rng.choice([None, rng.randint(0, 240)]),
                ingredient_lines=tuple(random_text(rng) for _ in range(rng.randint(1, max_ingredients))),
                instructions=rng.choice([None, random_text(rng, max_words=20, allow_newline=True)]),
            )
        )
    return recipes


if __name__ == "__main__":
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    sys.stdout.write(write_recipe_file(generate_raw_corpus(seed=0, n_recipes=count)))
