"""Benchmark dataset resolution and curated reference values.

Datasets are not bundled; a manifest of `name url sha256` rows plus the
scripts/fetch_datasets.py helper downloads them into a data directory as
<name>.edges files. Reference values for the six benchmark networks (and
per-metric tolerances) ship as package data so reproduction runs can grade
themselves.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .graph import Graph, load_edge_list

__all__ = [
    "NETWORK_NAMES",
    "DatasetMissingError",
    "ManifestEntry",
    "read_manifest",
    "dataset_path",
    "load_dataset",
    "load_reference_values",
]

NETWORK_NAMES = (
    "collaboration",
    "email",
    "ia-facebook",
    "soc-epinions",
    "soc-facebook",
    "soc-hamsterster",
)

FETCH_HINT = "python scripts/fetch_datasets.py --dest <data-dir>"


class DatasetMissingError(FileNotFoundError):
    def __init__(self, name: str, path: Path):
        super().__init__(
            f"dataset {name!r} not found at {path}; fetch it with: {FETCH_HINT}")
        self.name = name
        self.path = path


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    url: str
    sha256: str  # "-" when the exact benchmark file could not be pinned


def read_manifest(path) -> list[ManifestEntry]:
    entries = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"manifest line needs 3 fields: {line!r}")
        entries.append(ManifestEntry(*parts))
    return entries


def dataset_path(data_dir, name: str) -> Path:
    return Path(data_dir) / f"{name}.edges"


def load_dataset(data_dir, name: str) -> Graph:
    path = dataset_path(data_dir, name)
    if not path.is_file():
        raise DatasetMissingError(name, path)
    return load_edge_list(path)


def load_reference_values(path=None) -> dict:
    """Reference table values and tolerances; bundled file by default."""
    if path is not None:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    with resources.files("cyclerank").joinpath("reference_values.json").open(
            "r", encoding="utf-8") as fh:
        return json.load(fh)
