"""cyclerank: cycle-structure ranking of influential spreaders.

Scores nodes of undirected simple graphs with six methods (degree,
coreness, betweenness, shortest-cycle ratio, basic-cycle count, and the
basic-cycle ratio), evaluates seed sets with a discrete-time SIR engine,
and reproduces benchmark tables and figure inputs from raw edge lists.
"""

__version__ = "0.1.0"

from .backend import BACKEND
from .centrality import bc_scores, coreness_scores, dc_scores
from .cycles import (BasicCycle, BasicCycleSet, CycleMatrix, SpanningForest,
                     basic_cycles, bcr_scores, cycle_matrix, nc_scores,
                     spanning_forest)
from .graph import (ComponentLabeling, Graph, GraphParseError, components,
                    degree, degree_moments, load_edge_list, parse_edge_list,
                    to_canonical_edge_list)
from .metrics import (individuation, initializing_cost, kendall_tau,
                      seed_dispersion)
from .ranking import RankResult
from .shortest_cycles import ShortestCycleEntry, cr_scores, shortest_cycles
from .sir import (SirConfig, SirOutcome, ThresholdUndefinedError, beta_c,
                  select_seeds, simulate)

__all__ = [
    "__version__",
    "BACKEND",
    "Graph",
    "GraphParseError",
    "ComponentLabeling",
    "parse_edge_list",
    "load_edge_list",
    "to_canonical_edge_list",
    "degree",
    "components",
    "degree_moments",
    "RankResult",
    "SpanningForest",
    "BasicCycle",
    "BasicCycleSet",
    "CycleMatrix",
    "spanning_forest",
    "basic_cycles",
    "nc_scores",
    "cycle_matrix",
    "bcr_scores",
    "ShortestCycleEntry",
    "shortest_cycles",
    "cr_scores",
    "dc_scores",
    "coreness_scores",
    "bc_scores",
    "SirConfig",
    "SirOutcome",
    "ThresholdUndefinedError",
    "beta_c",
    "simulate",
    "select_seeds",
    "kendall_tau",
    "individuation",
    "initializing_cost",
    "seed_dispersion",
]
