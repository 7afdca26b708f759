"""Deterministic table and report emission with run manifests."""

import hashlib
import json
import logging
import sys
from pathlib import Path
from typing import Optional

import pandas as pd

from cli import __version__
from cli.models import OutputFormat, RunConfig, RunManifest

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def _native(value):
    """Unbox numpy scalars for json."""
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def render_table(table: pd.DataFrame, fmt: OutputFormat) -> str:
    """CSV with 17 significant digits, or JSON records with nulls for missing cells."""
    if fmt is OutputFormat.JSON:
        records = table.astype(object).where(table.notna(), None).to_dict(orient="records")
        return json.dumps(records, indent=2, default=_native) + "\n"
    return table.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def manifest_path(out: str) -> Path:
    return Path(f"{out}.manifest.json")


def write_manifest(config: RunConfig, data_path: Path) -> Path:
    """Write <out>.manifest.json holding the config, tool version and data digest."""
    digest = hashlib.sha256(data_path.read_bytes()).hexdigest()
    manifest = RunManifest(config=config, version=__version__, data_file=data_path.name, sha256=digest)
    path = manifest_path(str(data_path))
    path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote manifest {path}")
    return path


def emit(text: str, config: RunConfig) -> Optional[Path]:
    """Write text to config.out (plus manifest) or to stdout.

    Returns:
        The data file path, or None when writing to stdout.
    """
    if config.out is None:
        sys.stdout.write(text)
        return None

    path = Path(config.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    logger.info(f"Wrote {path}")
    write_manifest(config, path)
    return path
