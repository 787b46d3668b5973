# Shared fixtures: the bundled sample corpus, its hand-counted manifest and small graphs.
import json
from pathlib import Path

import pytest

from helpers import clique_edges, graph_from_edges
from src.corpus.recipe_parser import parse_recipe_file
from src.extract.ingredient_extractor import extract_corpus
from src.extract.stopwords import load_stopwords
from src.graph.network import build_network

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SAMPLE_DIR = PROJECT_ROOT / "data" / "sample"
FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def sample_dir():
    return SAMPLE_DIR


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def sample_stopwords_path():
    return SAMPLE_DIR / "stopwords.txt"


@pytest.fixture(scope="session")
def mini_corpus_path():
    return SAMPLE_DIR / "mini_corpus.jsonl"


@pytest.fixture(scope="session")
def sample_stopwords(sample_stopwords_path):
    with open(sample_stopwords_path, "rb") as f:
        return load_stopwords(f)


@pytest.fixture(scope="session")
def mini_manifest():
    with open(SAMPLE_DIR / "mini_corpus_manifest.json", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def mini_raw_recipes(mini_corpus_path):
    with open(mini_corpus_path, "rb") as f:
        return parse_recipe_file(f, "jsonl")


@pytest.fixture(scope="session")
def mini_extraction(mini_raw_recipes, sample_stopwords):
    return extract_corpus(mini_raw_recipes, sample_stopwords)


@pytest.fixture(scope="session")
def mini_recipes(mini_extraction):
    recipes, _ = mini_extraction
    return recipes


@pytest.fixture(scope="session")
def mini_network(mini_recipes):
    return build_network(mini_recipes)


@pytest.fixture
def triangle():
    return graph_from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])


@pytest.fixture
def two_triangles():
    return graph_from_edges(clique_edges("abc", 1) + clique_edges("def", 1))


@pytest.fixture
def two_cliques():
    """Two K5 blocks with intra-weight 10 joined by a single weight-1 edge n00000-n00005."""
    names = [f"n{i:05d}" for i in range(10)]
    return graph_from_edges(clique_edges(names[:5], 10) + clique_edges(names[5:], 10) + [(names[0], names[5], 1)])
