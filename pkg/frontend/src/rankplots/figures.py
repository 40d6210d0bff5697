"""Figure builders over cyclerank CSV tables.

Six figure ids are supported: kendall_heatmap, individuation, sir_vs_c,
sir_vs_beta, dispersion, cost. Rendering is a pure function of the input
tables under the pinned style, so identical inputs produce identical image
bytes. No metric is recomputed here; the tables are plotted as-is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .tables import SchemaError, Table, read_table  # noqa: E402

__all__ = ["FIGURE_IDS", "FigureSpec", "build_figure", "render"]

FIGURE_IDS = ("kendall_heatmap", "individuation", "sir_vs_c", "sir_vs_beta",
              "dispersion", "cost")


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    inputs: tuple[str, ...]
    output: str
    style: str | None = None
    beta_mult: float | None = None  # sir_vs_c: which multiplier to slice
    fraction: float | None = None  # sir_vs_beta: which seed fraction to slice


def _default_style() -> str:
    return str(resources.files("rankplots").joinpath("styles/default.mplstyle"))


def _methods_in_order(values: list[str]) -> list[str]:
    return list(dict.fromkeys(values))


def _method_colors(methods: list[str]) -> dict[str, str]:
    cycle = plt.rcParams["axes.prop_cycle"].by_key().get("color", ["C0"])
    return {m: cycle[i % len(cycle)] for i, m in enumerate(methods)}


def _fig_kendall_heatmap(table: Table, spec: FigureSpec):
    table.require("method")
    methods = table.column("method")
    matrix = np.array([[float(row[table.columns.index(m)])
                        for m in methods] for row in table.rows])
    fig, ax = plt.subplots()
    im = ax.imshow(matrix, vmin=min(0.0, float(matrix.min())), vmax=1.0)
    ax.set_xticks(range(len(methods)), methods)
    ax.set_yticks(range(len(methods)), methods)
    annotations = {}
    for i in range(len(methods)):
        for j in range(len(methods)):
            text = f"{matrix[i, j]:.2f}"
            annotations[(i, j)] = text
            ax.text(j, i, text, ha="center", va="center", fontsize=8,
                    color="white" if matrix[i, j] < 0.7 else "black")
    fig.colorbar(im, ax=ax, label="rank correlation")
    ax.set_title("Rank correlation between methods")
    info = {"methods": methods,
            "annotations": annotations,
            "diagonal": [annotations[(i, i)] for i in range(len(methods))]}
    return fig, info


def _fig_individuation(tables: list[Table], spec: FigureSpec):
    freq = tables[0]
    freq.require("method", "class_rank", "score", "count")
    gammas = {}
    if len(tables) > 1:
        gamma_table = tables[1]
        gamma_table.require("method", "gamma")
        gammas = {r["method"]: float(r["gamma"]) for r in gamma_table.records()}
    methods = _methods_in_order(freq.column("method"))
    colors = _method_colors(methods)
    fig, ax = plt.subplots()
    for m in methods:
        rows = [r for r in freq.records() if r["method"] == m]
        xs = [int(r["class_rank"]) for r in rows]
        ys = [int(r["count"]) for r in rows]
        label = f"{m} (gamma={gammas[m]:.4f})" if m in gammas else m
        ax.plot(xs, ys, label=label, color=colors[m])
    ax.set_yscale("log")
    ax.set_xlabel("score class (best first)")
    ax.set_ylabel("nodes sharing the score")
    ax.set_title("Score individuation per method")
    ax.legend()
    return fig, {"methods": methods}


def _slice_rows(table: Table, column: str, wanted: float | None,
                preferred: float) -> tuple[list[dict], float]:
    values = sorted({float(v) for v in table.column(column)})
    if wanted is None:
        wanted = preferred if preferred in values else values[0]
    if wanted not in values:
        raise SchemaError(f"{table.path}: no rows with {column} == {wanted}; "
                          f"available: {values}")
    rows = [r for r in table.records() if float(r[column]) == wanted]
    return rows, wanted


def _fig_sir_vs_c(table: Table, spec: FigureSpec):
    table.require("method", "c", "beta_multiplier", "R_mean")
    rows, mult = _slice_rows(table, "beta_multiplier", spec.beta_mult, 1.5)
    methods = _methods_in_order([r["method"] for r in rows])
    colors = _method_colors(methods)
    fig, ax = plt.subplots()
    for m in methods:
        mine = sorted((float(r["c"]), float(r["R_mean"]))
                      for r in rows if r["method"] == m)
        ax.plot([c for c, _ in mine], [v for _, v in mine],
                marker="o", label=m, color=colors[m])
    ax.set_xlabel("seed fraction c")
    ax.set_ylabel("final infected fraction R")
    ax.set_title(f"Spreading vs seed-set size (beta = {mult:g} x beta_c)")
    ax.legend()
    return fig, {"methods": methods, "beta_multiplier": mult}


def _fig_sir_vs_beta(table: Table, spec: FigureSpec):
    table.require("method", "c", "beta_multiplier", "R_mean")
    rows, frac = _slice_rows(table, "c", spec.fraction, 0.03)
    methods = _methods_in_order([r["method"] for r in rows])
    mults = sorted({float(r["beta_multiplier"]) for r in rows})
    value = {(r["method"], float(r["beta_multiplier"])): float(r["R_mean"])
             for r in rows}
    ranks = np.zeros((len(methods), len(mults)))
    for j, mult in enumerate(mults):
        ordered = sorted(methods, key=lambda m: -value[(m, mult)])
        for m in methods:
            ranks[methods.index(m), j] = ordered.index(m) + 1
    fig, ax = plt.subplots()
    # brighter = wider spread (rank 1), so plot inverted rank
    im = ax.imshow(len(methods) + 1 - ranks, vmin=1, vmax=len(methods),
                   aspect="auto")
    ax.set_xticks(range(len(mults)), [f"{m:g}" for m in mults])
    ax.set_yticks(range(len(methods)), methods)
    for i in range(len(methods)):
        for j in range(len(mults)):
            ax.text(j, i, f"{int(ranks[i, j])}", ha="center", va="center",
                    fontsize=9)
    ax.set_xlabel("beta multiplier (x beta_c)")
    ax.set_title(f"Outbreak-size rank at c = {frac:g} (1 = widest)")
    fig.colorbar(im, ax=ax, label="brighter = wider spread")
    return fig, {"methods": methods, "fraction": frac}


def _fig_dispersion(table: Table, spec: FigureSpec):
    table.require("method", "c", "d_c")
    records = table.records()
    methods = _methods_in_order([r["method"] for r in records])
    fractions = sorted({float(r["c"]) for r in records})
    colors = _method_colors(methods)
    width = 0.8 / len(methods)
    fig, ax = plt.subplots()
    for k, m in enumerate(methods):
        xs, ys = [], []
        for i, frac in enumerate(fractions):
            match = [r for r in records
                     if r["method"] == m and float(r["c"]) == frac]
            if match:
                xs.append(i + (k - (len(methods) - 1) / 2) * width)
                ys.append(float(match[0]["d_c"]))
        ax.bar(xs, ys, width=width, label=m, color=colors[m])
    ax.set_xticks(range(len(fractions)), [f"{f:g}" for f in fractions])
    ax.set_xlabel("seed fraction c")
    ax.set_ylabel("mean seed distance d_c")
    ax.set_title("Seed dispersion per method")
    ax.legend()
    return fig, {"methods": methods}


def _fig_cost(table: Table, spec: FigureSpec):
    table.require("method", "c", "lambda", "R_mean")
    records = table.records()
    methods = _methods_in_order([r["method"] for r in records])
    colors = _method_colors(methods)
    fig, ax = plt.subplots()
    for m in methods:
        mine = sorted((float(r["c"]), float(r["lambda"]), float(r["R_mean"]))
                      for r in records if r["method"] == m)
        ax.plot([l for _, l, _ in mine], [v for _, _, v in mine],
                marker="o", label=m, color=colors[m])
    ax.set_xlabel("seeding cost")
    ax.set_ylabel("final infected fraction R")
    ax.set_title("Spreading vs seeding cost")
    ax.legend()
    return fig, {"methods": methods}


def build_figure(spec: FigureSpec):
    """Build the matplotlib figure plus an info dict (callers must close)."""
    if spec.figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {spec.figure_id!r}; "
                         f"choose from {FIGURE_IDS}")
    if not spec.inputs:
        raise ValueError("at least one input table is required")
    tables = [read_table(p) for p in spec.inputs]
    if spec.figure_id == "kendall_heatmap":
        return _fig_kendall_heatmap(tables[0], spec)
    if spec.figure_id == "individuation":
        return _fig_individuation(tables, spec)
    if spec.figure_id == "sir_vs_c":
        return _fig_sir_vs_c(tables[0], spec)
    if spec.figure_id == "sir_vs_beta":
        return _fig_sir_vs_beta(tables[0], spec)
    if spec.figure_id == "dispersion":
        return _fig_dispersion(tables[0], spec)
    return _fig_cost(tables[0], spec)


def render(spec: FigureSpec) -> dict:
    """Render the figure to spec.output; returns the build info dict."""
    style = spec.style or _default_style()
    with plt.style.context(style):
        fig, info = build_figure(spec)
        out = Path(spec.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out)
        plt.close(fig)
    info["output"] = str(out)
    return info
