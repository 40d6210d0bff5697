"""rankplots: figure rendering for cyclerank experiment tables."""

__version__ = "0.1.0"

from .figures import FIGURE_IDS, FigureSpec, build_figure, render
from .tables import SchemaError, Table, read_table

__all__ = ["__version__", "FIGURE_IDS", "FigureSpec", "build_figure",
           "render", "SchemaError", "Table", "read_table"]
