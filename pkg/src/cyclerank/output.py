"""Deterministic table output: CSV (with a meta comment line) or JSON.

Every table starts with `# key=value ...` recording the config hash, seed,
and tool version, then a header row. Floats are serialized with repr so
files round-trip exactly and identical runs are byte-identical. Writes go
through a temp file and os.replace, so readers never see partial tables.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from . import __version__

__all__ = ["config_hash", "write_table"]


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:12]


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_table(path, header: list[str], rows, meta: dict, fmt: str = "csv") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "csv":
        meta_line = "# " + " ".join(f"{k}={v}" for k, v in meta.items())
        lines = [meta_line, ",".join(header)]
        lines.extend(",".join(_cell(v) for v in row) for row in rows)
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        payload = json.dumps(
            {"meta": {k: str(v) for k, v in meta.items()},
             "columns": header,
             "rows": [[v if not isinstance(v, float) else v for v in row]
                      for row in rows]},
            indent=1, sort_keys=False) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, path)
    return path
