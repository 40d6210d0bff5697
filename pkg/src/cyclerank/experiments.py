"""Experiment orchestration behind the CLI subcommands.

Each command materializes a deterministic list of cells, evaluates them
(optionally on a bounded thread pool), and assembles output tables in a
fixed order, so re-running with the same config and seed is byte-identical
regardless of worker count.

sir.csv keeps one row per (method, fraction, beta multiplier). For the
tree-dependent methods (nc, bcr) with realizations > 1, R_mean is the mean
over per-realization mean outcomes and R_std the sample std across those
realization means; per-tree detail goes to sir_realizations.csv. For the
deterministic methods R_mean/R_std are run-level statistics.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .backend import BACKEND
from .cycles import DEFAULT_TREE_SEED, basic_cycles, dump_basic_cycles, spanning_forest
from .datasets import NETWORK_NAMES, load_dataset, load_reference_values
from .graph import Graph, average_clustering, components, degree_moments, density
from .methods import METHODS, TREE_METHODS, compute_scores
from .metrics import individuation, initializing_cost, kendall_tau, seed_dispersion
from .output import config_hash, write_table
from .ranking import RankResult
from .sir import SirConfig, beta_c, select_seeds, simulate

__all__ = ["ExperimentConfig", "run_rank", "run_sir", "run_eval", "run_reproduce"]

DEFAULT_FRACTIONS = (0.01, 0.02, 0.03, 0.04, 0.05)
DEFAULT_BETA_MULTS = (1.0, 1.5, 2.0, 2.5, 3.0)
DEFAULT_COST_FRACTIONS = (0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10)
TABLE_FRACTION = 0.02  # seed fraction used by the spreading-ability table
FIGURE_BETA_MULT = 1.5  # infection rate used by the seed-set figures


@dataclass
class ExperimentConfig:
    graph: str = ""
    methods: tuple = METHODS
    fractions: tuple = DEFAULT_FRACTIONS
    beta_mults: tuple = DEFAULT_BETA_MULTS
    cost_fractions: tuple = DEFAULT_COST_FRACTIONS
    mu: float = 0.5
    runs: int = 1000
    realizations: int = 30
    rng_seed: int = 42
    out: str = "out"
    format: str = "csv"
    workers: int = 1
    tau_variant: str = "paper"
    data_dir: str = "data"
    networks: tuple = NETWORK_NAMES
    reference: str = ""
    dump_cycles: str = ""

    def validate(self) -> None:
        for name, seq in (("methods", self.methods),
                          ("fractions", self.fractions),
                          ("beta_mults", self.beta_mults),
                          ("cost_fractions", self.cost_fractions)):
            if not seq:
                raise ValueError(f"{name} must be nonempty")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}; choose from {METHODS}")
        for f in tuple(self.fractions) + tuple(self.cost_fractions):
            if not 0 < f <= 1:
                raise ValueError(f"fraction {f} outside (0, 1]")
        for b in self.beta_mults:
            if b < 0:
                raise ValueError(f"beta multiplier {b} negative")
        if not 0 < self.mu <= 1:
            raise ValueError(f"mu {self.mu} outside (0, 1]")
        if self.runs < 1 or self.realizations < 1:
            raise ValueError("runs and realizations must be positive")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.tau_variant not in ("paper", "tie-corrected"):
            raise ValueError("tau variant must be paper or tie-corrected")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def meta(self) -> dict:
        return {"config": config_hash(asdict(self)), "seed": self.rng_seed,
                "version": __version__, "backend": BACKEND}


class RankCache:
    """Lazily computed (method, tree seed) -> RankResult for one graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self._store: dict[tuple[str, int], RankResult] = {}

    def get(self, method: str, tree_seed: int = DEFAULT_TREE_SEED) -> RankResult:
        if method not in TREE_METHODS:
            tree_seed = DEFAULT_TREE_SEED  # seed is irrelevant; share the entry
        key = (method, tree_seed)
        if key not in self._store:
            self._store[key] = compute_scores(self.graph, method, tree_seed=tree_seed)
        return self._store[key]


def _tree_seeds(cfg: ExperimentConfig, method: str, realizations: bool) -> list[int]:
    if realizations and method in TREE_METHODS and cfg.realizations > 1:
        return list(range(cfg.realizations))
    return [DEFAULT_TREE_SEED]


def run_rank(g: Graph, cfg: ExperimentConfig,
             ranks: RankCache | None = None) -> dict[str, RankResult]:
    """Write one rank table per method; per-realization tables for nc/bcr."""
    cfg.validate()
    ranks = ranks or RankCache(g)
    out = Path(cfg.out)
    ext = cfg.format
    results = {}
    for method in cfg.methods:
        result = ranks.get(method)
        results[method] = result
        write_table(out / f"rank_{method}.{ext}", ["node_label", "score", "rank"],
                    list(result.rows()), cfg.meta(), ext)
        if method in TREE_METHODS and cfg.realizations > 1:
            for seed in range(cfg.realizations):
                realization = ranks.get(method, seed)
                write_table(out / f"rank_{method}_seed{seed}.{ext}",
                            ["node_label", "score", "rank"],
                            list(realization.rows()), cfg.meta(), ext)
    if cfg.dump_cycles and any(m in TREE_METHODS for m in cfg.methods):
        cycles = basic_cycles(g, spanning_forest(g, DEFAULT_TREE_SEED))
        Path(cfg.dump_cycles).write_text(
            dump_basic_cycles(cycles, g.labels), encoding="utf-8")
    return results


def _simulate_cells(g: Graph, cfg: ExperimentConfig, jobs: list[dict]) -> list:
    """Evaluate SIR jobs (each with 'seeds' and 'beta') preserving order."""
    def one(job):
        sir_cfg = SirConfig(beta=job["beta"], seeds=job["seeds"], mu=cfg.mu,
                            runs=cfg.runs, rng_seed=cfg.rng_seed)
        return simulate(g, sir_cfg)

    if cfg.workers == 1:
        return [one(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(one, jobs))


def _beta_for(g: Graph, mult: float) -> float:
    return min(1.0, mult * beta_c(g))


def run_sir(g: Graph, cfg: ExperimentConfig, fractions=None, beta_mults=None,
            basename: str = "sir", ranks: RankCache | None = None,
            realizations: bool = True):
    """Spreading table over method x fraction x beta-multiplier cells."""
    cfg.validate()
    ranks = ranks or RankCache(g)
    fractions = tuple(fractions if fractions is not None else cfg.fractions)
    beta_mults = tuple(beta_mults if beta_mults is not None else cfg.beta_mults)
    jobs = []
    for method in cfg.methods:
        for frac in fractions:
            for mult in beta_mults:
                for seed in _tree_seeds(cfg, method, realizations):
                    jobs.append({
                        "method": method, "c": frac, "mult": mult, "tree_seed": seed,
                        "seeds": select_seeds(ranks.get(method, seed), frac),
                        "beta": _beta_for(g, mult)})
    outcomes = _simulate_cells(g, cfg, jobs)

    by_cell: dict[tuple, list] = {}
    for job, outcome in zip(jobs, outcomes):
        key = (job["method"], job["c"], job["mult"])
        by_cell.setdefault(key, []).append((job["tree_seed"], outcome))
    main_rows = []
    detail_rows = []
    for method in cfg.methods:
        for frac in fractions:
            for mult in beta_mults:
                cell = by_cell[(method, frac, mult)]
                if len(cell) == 1:
                    outcome = cell[0][1]
                    main_rows.append([method, frac, mult, outcome.r_mean,
                                      outcome.r_std, outcome.runs])
                else:
                    means = np.array([o.r_mean for _, o in cell])
                    main_rows.append([method, frac, mult, float(means.mean()),
                                      float(means.std(ddof=1)), cfg.runs])
                    for seed, outcome in cell:
                        detail_rows.append([method, frac, mult, seed,
                                            outcome.r_mean, outcome.r_std,
                                            outcome.runs])
    out = Path(cfg.out)
    write_table(out / f"{basename}.{cfg.format}",
                ["method", "c", "beta_multiplier", "R_mean", "R_std", "runs"],
                main_rows, cfg.meta(), cfg.format)
    if detail_rows:
        write_table(out / f"{basename}_realizations.{cfg.format}",
                    ["method", "c", "beta_multiplier", "tree_seed",
                     "R_mean", "R_std", "runs"],
                    detail_rows, cfg.meta(), cfg.format)
    return main_rows, detail_rows


def _score_classes(result: RankResult) -> list[tuple[float, int]]:
    """Distinct rounded scores with multiplicities, best score first."""
    rounded = np.round(result.scores, 9)
    values, counts = np.unique(rounded, return_counts=True)
    return [(float(v), int(c)) for v, c in zip(values[::-1], counts[::-1])]


def tau_matrix(ranks: dict[str, RankResult], methods, variant: str) -> list[list]:
    """Pairwise correlation rows; self-comparison is definitionally 1."""
    rows = []
    cache = {}
    for a in methods:
        row = [a]
        for b in methods:
            if a == b:
                row.append(1.0)
                continue
            key = (a, b) if (a, b) in cache else (b, a)
            if key not in cache:
                key = (a, b)
                cache[key] = kendall_tau(ranks[a], ranks[b], variant)
            row.append(cache[key])
        rows.append(row)
    return rows


def run_eval(g: Graph, cfg: ExperimentConfig,
             ranks: RankCache | None = None) -> dict[str, list]:
    """Correlation, individuation, score-frequency, dispersion, and
    cost-vs-spreading tables."""
    cfg.validate()
    ranks = ranks or RankCache(g)
    out = Path(cfg.out)
    ext = cfg.format
    meta = cfg.meta()
    by_method = {m: ranks.get(m) for m in cfg.methods}

    tau_rows = tau_matrix(by_method, cfg.methods, cfg.tau_variant)
    write_table(out / f"tau_matrix.{ext}", ["method", *cfg.methods],
                tau_rows, meta, ext)

    gamma_rows = [[m, individuation(by_method[m])] for m in cfg.methods]
    write_table(out / f"individuation.{ext}", ["method", "gamma"],
                gamma_rows, meta, ext)

    freq_rows = []
    for m in cfg.methods:
        for rank_pos, (score, count) in enumerate(_score_classes(by_method[m]), start=1):
            freq_rows.append([m, rank_pos, score, count])
    write_table(out / f"score_frequencies.{ext}",
                ["method", "class_rank", "score", "count"],
                freq_rows, meta, ext)

    disp_rows = []
    for m in cfg.methods:
        for frac in cfg.fractions:
            seeds = select_seeds(by_method[m], frac)
            try:
                d_c, excluded = seed_dispersion(g, seeds)
            except ValueError:
                d_c, excluded = float("nan"), 0
            disp_rows.append([m, frac, d_c, excluded])
    write_table(out / f"dispersion.{ext}",
                ["method", "c", "d_c", "excluded_pairs"],
                disp_rows, meta, ext)

    jobs = []
    for m in cfg.methods:
        for frac in cfg.cost_fractions:
            jobs.append({"method": m, "c": frac,
                         "seeds": select_seeds(by_method[m], frac),
                         "beta": _beta_for(g, FIGURE_BETA_MULT)})
    outcomes = _simulate_cells(g, cfg, jobs)
    cost_rows = []
    for job, outcome in zip(jobs, outcomes):
        lam = initializing_cost(g, job["seeds"])
        cost_rows.append([job["method"], job["c"], lam,
                          outcome.r_mean, outcome.r_std, outcome.runs])
    write_table(out / f"cost.{ext}",
                ["method", "c", "lambda", "R_mean", "R_std", "runs"],
                cost_rows, meta, ext)

    return {"tau": tau_rows, "gamma": gamma_rows, "frequencies": freq_rows,
            "dispersion": disp_rows, "cost": cost_rows}


def _check_cell(expected, computed, tol) -> str:
    if expected is None:
        return "skip"
    return "pass" if abs(computed - expected) <= tol else "fail"


def run_reproduce(cfg: ExperimentConfig) -> dict:
    """Regenerate the statistics, individuation, and spreading tables plus
    all figure inputs for the configured networks, grading every cell that
    has a reference value."""
    cfg.validate()
    reference = load_reference_values(cfg.reference or None)
    tolerances = reference.get("tolerances", {})
    ref_networks = reference.get("networks", {})
    networks = tuple(cfg.networks) or tuple(sorted(ref_networks))
    out = Path(cfg.out)
    ext = cfg.format
    meta = cfg.meta()

    stats_rows = []
    gamma_table_rows = []
    spreading_rows = []
    check_rows = []
    summary_rows = []
    tau_sums: np.ndarray | None = None

    for name in networks:
        g = load_dataset(cfg.data_dir, name)
        ref = ref_networks.get(name, {})
        net_cfg = ExperimentConfig(**{**asdict(cfg), "out": str(out / name)})
        ranks = RankCache(g)

        comp = components(g)
        k1, _ = degree_moments(g)
        stats = {"n": g.n, "m": g.m, "density": density(g),
                 "clustering": average_clustering(g), "mean_degree": k1}
        stats_rows.append([name, g.n, g.m, stats["density"], stats["clustering"],
                           stats["mean_degree"], comp.count])
        ref_stats = ref.get("network_stats", {})
        tol_stats = tolerances.get("network_stats", {})
        for metric in ("n", "m", "density", "clustering", "mean_degree"):
            exp = ref_stats.get(metric)
            tol = tol_stats.get(metric, 0)
            check_rows.append([name, "network_stats", metric, exp, stats[metric],
                               tol, _check_cell(exp, stats[metric], tol)])

        by_method = run_rank(g, net_cfg, ranks=ranks)
        gammas = {m: individuation(by_method[m]) for m in cfg.methods}
        gamma_table_rows.append([name, *[gammas[m] for m in cfg.methods]])
        ref_gamma = ref.get("individuation", {})
        tol_gamma = tolerances.get("individuation", {})
        for m in cfg.methods:
            exp = ref_gamma.get(m)
            tol = tol_gamma.get(m, 0)
            check_rows.append([name, "individuation", m, exp, gammas[m],
                               tol, _check_cell(exp, gammas[m], tol)])

        eval_tables = run_eval(g, net_cfg, ranks=ranks)
        tau_arr = np.array([[row[j + 1] for j in range(len(cfg.methods))]
                            for row in eval_tables["tau"]], dtype=np.float64)
        tau_sums = tau_arr if tau_sums is None else tau_sums + tau_arr

        # spreading-ability table: top-2% seeds, beta = 1.5*beta_c, with
        # per-tree realizations for nc/bcr
        table_rows, detail_rows = run_sir(
            g, net_cfg, fractions=(TABLE_FRACTION,),
            beta_mults=(FIGURE_BETA_MULT,), basename="sir_table", ranks=ranks)
        spread = {row[0]: row[3] for row in table_rows}
        variance = {}
        for m in TREE_METHODS:
            means = np.array([r[4] for r in detail_rows if r[0] == m])
            if len(means) > 1:
                variance[m] = float(means.var(ddof=1))
        ref_spread = ref.get("spreading", {})
        tol_spread = tolerances.get("spreading", {})
        spreading_rows.append([name, *[spread[m] for m in cfg.methods],
                               variance.get("nc", float("nan")),
                               variance.get("bcr", float("nan"))])
        for m in cfg.methods:
            exp = ref_spread.get(m)
            tol = tol_spread.get(m, 0.02)
            check_rows.append([name, "spreading", m, exp, spread[m],
                               tol, _check_cell(exp, spread[m], tol)])

        # figure inputs: R vs seed fraction, and R vs infection rate at top-3%
        run_sir(g, net_cfg, fractions=cfg.fractions,
                beta_mults=(FIGURE_BETA_MULT,), basename="sir",
                ranks=ranks, realizations=False)
        run_sir(g, net_cfg, fractions=(0.03,), beta_mults=cfg.beta_mults,
                basename="sir_beta", ranks=ranks, realizations=False)

        best_gamma = max(cfg.methods, key=lambda m: gammas[m])
        best_spread = max(cfg.methods, key=lambda m: spread[m])
        summary_rows.append([name, best_gamma, best_spread,
                             variance.get("bcr", float("nan"))])

    write_table(out / f"network_stats.{ext}",
                ["network", "n", "m", "density", "clustering", "mean_degree",
                 "components"], stats_rows, meta, ext)
    write_table(out / f"individuation.{ext}", ["network", *cfg.methods],
                gamma_table_rows, meta, ext)
    write_table(out / f"spreading.{ext}",
                ["network", *cfg.methods, "nc_variance", "bcr_variance"],
                spreading_rows, meta, ext)
    write_table(out / f"summary.{ext}",
                ["network", "best_gamma_method", "best_spreading_method",
                 "bcr_spreading_variance"], summary_rows, meta, ext)
    write_table(out / f"reference_check.{ext}",
                ["network", "table", "metric", "expected", "computed",
                 "tolerance", "status"],
                [[r[0], r[1], r[2], "" if r[3] is None else r[3], r[4], r[5], r[6]]
                 for r in check_rows], meta, ext)
    if tau_sums is not None:
        avg = tau_sums / len(networks)
        rows = [[m, *[float(avg[i, j]) for j in range(len(cfg.methods))]]
                for i, m in enumerate(cfg.methods)]
        write_table(out / f"tau_matrix_avg.{ext}", ["method", *cfg.methods],
                    rows, meta, ext)
    return {"stats": stats_rows, "gamma": gamma_table_rows,
            "spreading": spreading_rows, "checks": check_rows,
            "summary": summary_rows}
