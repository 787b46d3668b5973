# Writes pipeline artifacts into the output directory.
# Existing files are never replaced silently: pass force=True to overwrite.
import json
from pathlib import Path

from src.utils.errors import ArtifactError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def to_json_text(payload, sort_keys=True):
    return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=sort_keys) + "\n"


def to_jsonl_text(rows):
    return "".join(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n" for row in rows)


class ArtifactWriter:
    def __init__(self, output_dir, force=False):
        self.output_dir = Path(output_dir)
        self.force = force
        self.written = []
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error("Could not create output directory", extra={"path": str(self.output_dir)})
            raise ArtifactError(f"cannot create output directory {self.output_dir}: {e}")

    def path(self, name):
        return self.output_dir / name

    def write_text(self, name, text):
        target = self.path(name)
        if target.exists() and not self.force and target not in self.written:
            raise ArtifactError(f"{target} already exists; use --force to overwrite")
        # newline="" keeps "\n" endings on every platform
        with open(target, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        if target not in self.written:
            self.written.append(target)
        logger.info("Artifact written", extra={"path": str(target), "bytes": len(text.encode("utf-8"))})
        return target

    def write_json(self, name, payload, sort_keys=True):
        return self.write_text(name, to_json_text(payload, sort_keys=sort_keys))

    def write_jsonl(self, name, rows):
        return self.write_text(name, to_jsonl_text(rows))
