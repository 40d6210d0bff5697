"""Reader for cyclerank output tables.

Tables are CSV with one leading `# key=value ...` comment line and a header
row; all parsing stays tolerant of extra columns but strict about missing
ones (missing columns are the only schema error the figures can hit).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

__all__ = ["Table", "SchemaError", "read_table"]


class SchemaError(ValueError):
    """An input table is missing a column a figure needs."""


@dataclass
class Table:
    path: Path
    columns: list[str]
    rows: list[list[str]]

    def require(self, *names: str) -> None:
        missing = [c for c in names if c not in self.columns]
        if missing:
            raise SchemaError(
                f"{self.path}: missing column(s) {', '.join(missing)}; "
                f"found {', '.join(self.columns)}")

    def column(self, name: str) -> list[str]:
        self.require(name)
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def floats(self, name: str) -> list[float]:
        return [float(v) for v in self.column(name)]

    def records(self) -> list[dict[str, str]]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def read_table(path) -> Table:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SchemaError(f"{path}: empty table")
    columns = lines[0].split(",")
    rows = [ln.split(",") for ln in lines[1:]]
    for row in rows:
        if len(row) != len(columns):
            raise SchemaError(f"{path}: row width {len(row)} != "
                              f"header width {len(columns)}")
    return Table(path=path, columns=columns, rows=rows)
