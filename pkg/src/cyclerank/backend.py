"""Kernel backend selection: compiled extension if available, else pure Python.

Both backends are bit-identical for the same inputs and seed; the env var
CYCLERANK_BACKEND=python|compiled forces a choice (useful for benchmarks).
"""

from __future__ import annotations

import os

from . import _kernels_py

_forced = os.environ.get("CYCLERANK_BACKEND", "").strip().lower()

if _forced == "python":
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "CYCLERANK_BACKEND=compiled but the cyclerank._kernels "
                "extension is not built; install with `pip install -e .`")
        kernels = _kernels_py

BACKEND: str = kernels.BACKEND_NAME

__all__ = ["kernels", "BACKEND"]
