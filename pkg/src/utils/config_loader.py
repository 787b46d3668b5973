# Run this script in the terminal using: python3 -m src.utils.config_loader
# Builds the RunConfig every CLI subcommand works from.
# Precedence: CLI flag > config/.env / process environment > built-in default
import os
from enum import Enum
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.utils.logger import get_logger


# Load environment variables from .env file into OS memory
load_dotenv("config/.env")

logger = get_logger(__name__)

ALGORITHMS = ("wabcd", "louvain")
EXPORT_FORMATS = ("tsv", "dot", "graphml")


class RecipeFormat(str, Enum):
    JSONL = "jsonl"
    CSV = "csv"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    input_path: Optional[Path] = None
    input_format: RecipeFormat = RecipeFormat.JSONL
    stopwords_path: Optional[Path] = None
    output_dir: Path = Path("output")
    categories: tuple[str, ...] = ()
    algorithms: tuple[str, ...] = ALGORITHMS
    louvain_seed: int = 0
    louvain_resolution: float = Field(default=1.0, gt=0)
    export_formats: tuple[str, ...] = EXPORT_FORMATS
    threads: int = Field(default=1, ge=1)
    force: bool = False

    @field_validator("algorithms")
    @classmethod
    def check_algorithms(cls, value):
        unknown = [name for name in value if name not in ALGORITHMS]
        if unknown:
            raise ValueError(
                f"unknown algorithm {', '.join(unknown)}; valid names: {', '.join(ALGORITHMS)}"
            )
        if not value:
            raise ValueError("at least one algorithm is required")
        return value

    @field_validator("export_formats")
    @classmethod
    def check_formats(cls, value):
        unknown = [name for name in value if name not in EXPORT_FORMATS]
        if unknown:
            raise ValueError(
                f"unknown export format {', '.join(unknown)}; valid formats: {', '.join(EXPORT_FORMATS)}"
            )
        return value

    @field_validator("categories")
    @classmethod
    def check_categories(cls, value):
        if any(not label.strip() for label in value):
            raise ValueError("category labels must be non-empty")
        return value


def _env_int(name, default):
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


def _env_float(name, default):
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be a number, got {raw!r}")


def default_threads():
    return max(1, os.cpu_count() or 1)


def load_run_config(**overrides):
    """
    Merge environment defaults with explicit overrides (None means "not given").

    Returns a validated RunConfig; pydantic's ValidationError is a ValueError,
    so bad values surface the same way as every other config error.
    """
    values = {
        "output_dir": os.getenv("INN_OUTPUT_DIR", "output"),
        "stopwords_path": os.getenv("INN_STOPWORDS") or None,
        "threads": _env_int("INN_THREADS", default_threads()),
        "louvain_seed": _env_int("INN_LOUVAIN_SEED", 0),
        "louvain_resolution": _env_float("INN_LOUVAIN_RESOLUTION", 1.0),
    }
    values.update({key: value for key, value in overrides.items() if value is not None})

    config = RunConfig(**values)
    logger.debug(
        "Run configuration resolved",
        extra={
            "output_dir": str(config.output_dir),
            "threads": config.threads,
            "algorithms": ",".join(config.algorithms),
        },
    )
    return config


if __name__ == "__main__":
    print(load_run_config().model_dump_json(indent=2))
