"""Registry of the six ranking methods over a shared interface."""

from __future__ import annotations

from .centrality import bc_scores, coreness_scores, dc_scores
from .cycles import (DEFAULT_TREE_SEED, basic_cycles, bcr_scores, cycle_matrix,
                     nc_scores, spanning_forest)
from .graph import Graph
from .ranking import RankResult
from .shortest_cycles import cr_scores

__all__ = ["METHODS", "TREE_METHODS", "compute_scores"]

TREE_METHODS = ("nc", "bcr")  # depend on the spanning-forest realization
METHODS = ("dc", "coreness", "bc", "cr", "nc", "bcr")


def compute_scores(g: Graph, method: str,
                   tree_seed: int = DEFAULT_TREE_SEED) -> RankResult:
    """Score one method; `tree_seed` only affects nc and bcr."""
    if method == "dc":
        return dc_scores(g)
    if method == "coreness":
        return coreness_scores(g)
    if method == "bc":
        return bc_scores(g)
    if method == "cr":
        return cr_scores(g)
    if method in ("nc", "bcr"):
        cycles = basic_cycles(g, spanning_forest(g, tree_seed))
        if method == "nc":
            return nc_scores(cycles, g.labels)
        return bcr_scores(cycle_matrix(cycles, g.n), g.labels)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
