# Records which inputs produced the artifacts in an output directory, so later stages
# can warn when they are about to reuse artifacts built from different inputs.
import hashlib
import json
from pathlib import Path

from src.utils.logger import get_logger

logger = get_logger(__name__)

MANIFEST_NAME = "run_manifest.json"


def file_sha256(path):
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


def load_manifest(output_dir):
    path = Path(output_dir) / MANIFEST_NAME
    if not path.exists():
        return {}
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def record_stage(writer, stage, inputs):
    """
    Store sha256 hashes of a stage's input files ({role: path}) in the manifest.
    The manifest goes through the stage's ArtifactWriter, so it obeys the same overwrite rule
    as every other artifact; stages already recorded in it are kept.
    """
    manifest = load_manifest(writer.output_dir)
    manifest[stage] = {role: file_sha256(path) for role, path in sorted(inputs.items()) if path is not None}
    writer.write_json(MANIFEST_NAME, manifest)
    return manifest[stage]


def stale_inputs(output_dir, stage, inputs):
    """
    Compare current input files with what `stage` recorded. Returns the roles whose
    content changed (or that were never recorded) and logs a staleness warning for them.
    """
    recorded = load_manifest(output_dir).get(stage)
    if recorded is None:
        return []
    stale = []
    for role, path in sorted(inputs.items()):
        if path is None or not Path(path).exists():
            continue
        if recorded.get(role) != file_sha256(path):
            stale.append(role)
    if stale:
        logger.warning(
            "Artifacts may be stale; inputs changed since they were produced",
            extra={"stage": stage, "changed_inputs": ",".join(stale)},
        )
    return stale
