"""Command-line interface: rank | sir | eval | reproduce.

Options can also come from a JSON config file (--config); explicit flags
override file values, which override built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .datasets import DatasetMissingError
from .experiments import (DEFAULT_BETA_MULTS, DEFAULT_COST_FRACTIONS,
                          DEFAULT_FRACTIONS, ExperimentConfig, run_eval,
                          run_rank, run_reproduce, run_sir)
from .graph import GraphParseError, load_edge_list
from .methods import METHODS

LIST_FIELDS = {
    "methods": str,
    "fractions": float,
    "beta_mults": float,
    "cost_fractions": float,
    "networks": str,
}


def _csv_list(kind):
    def parse(text):
        return tuple(kind(tok) for tok in text.split(",") if tok.strip())
    return parse


def _add_common(p: argparse.ArgumentParser, graph_required: bool) -> None:
    p.add_argument("--config", help="JSON config file; flags override it")
    if graph_required:
        p.add_argument("--graph", help="edge-list file (two labels per line)")
    p.add_argument("--methods", type=_csv_list(str),
                   help=f"comma list from {','.join(METHODS)}")
    p.add_argument("--seed", type=int, dest="rng_seed", help="base RNG seed")
    p.add_argument("--realizations", type=int,
                   help="spanning-tree realizations for nc/bcr")
    p.add_argument("--out", help="output directory")
    p.add_argument("--format", choices=("csv", "json"), help="table format")
    p.add_argument("--workers", type=int, help="worker threads for SIR cells")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclerank",
        description="Rank influential spreaders by cycle structure and "
                    "benchmark centralities; evaluate them with SIR spreading.")
    ap.add_argument("--version", action="version", version=f"cyclerank {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="score nodes, write rank tables")
    _add_common(p_rank, graph_required=True)
    p_rank.add_argument("--dump-cycles", help="write the basic-cycle debug dump")

    p_sir = sub.add_parser("sir", help="SIR spreading over method/fraction/beta cells")
    _add_common(p_sir, graph_required=True)
    p_sir.add_argument("--fractions", type=_csv_list(float),
                       help="seed fractions, e.g. 0.01,0.02")
    p_sir.add_argument("--beta-mults", type=_csv_list(float), dest="beta_mults",
                       help="multipliers of the epidemic threshold beta_c")
    p_sir.add_argument("--mu", type=float, help="recovery probability")
    p_sir.add_argument("--runs", type=int, help="Monte Carlo runs per cell")

    p_eval = sub.add_parser("eval", help="correlation/individuation/cost/dispersion tables")
    _add_common(p_eval, graph_required=True)
    p_eval.add_argument("--fractions", type=_csv_list(float))
    p_eval.add_argument("--cost-fractions", type=_csv_list(float), dest="cost_fractions")
    p_eval.add_argument("--mu", type=float)
    p_eval.add_argument("--runs", type=int)
    p_eval.add_argument("--tau-variant", choices=("paper", "tie-corrected"),
                        dest="tau_variant")

    p_rep = sub.add_parser("reproduce",
                           help="regenerate all tables and figure inputs, "
                                "graded against bundled reference values")
    _add_common(p_rep, graph_required=False)
    p_rep.add_argument("--data-dir", dest="data_dir",
                       help="directory of <network>.edges files")
    p_rep.add_argument("--networks", type=_csv_list(str),
                       help="subset of benchmark network names")
    p_rep.add_argument("--fractions", type=_csv_list(float))
    p_rep.add_argument("--beta-mults", type=_csv_list(float), dest="beta_mults")
    p_rep.add_argument("--cost-fractions", type=_csv_list(float), dest="cost_fractions")
    p_rep.add_argument("--mu", type=float)
    p_rep.add_argument("--runs", type=int)
    p_rep.add_argument("--reference", help="alternative reference-values JSON")
    return ap


def make_config(args: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig()
    if getattr(args, "config", None):
        file_values = json.loads(Path(args.config).read_text(encoding="utf-8"))
        for key, value in file_values.items():
            if not hasattr(cfg, key):
                raise ValueError(f"unknown config key {key!r}")
            if key in LIST_FIELDS and isinstance(value, (list, tuple)):
                value = tuple(LIST_FIELDS[key](v) for v in value)
            setattr(cfg, key, value)
    for key, value in vars(args).items():
        if key in ("command", "config") or value is None:
            continue
        if hasattr(cfg, key):
            setattr(cfg, key, value)
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        if args.command == "reproduce":
            results = run_reproduce(cfg)
            failed = [r for r in results["checks"] if r[6] == "fail"]
            graded = [r for r in results["checks"] if r[6] != "skip"]
            print(f"reproduce: {len(graded) - len(failed)}/{len(graded)} "
                  f"reference cells passed; outputs in {cfg.out}")
            return 0
        if not cfg.graph:
            raise ValueError("--graph is required")
        g = load_edge_list(cfg.graph)
        if args.command == "rank":
            run_rank(g, cfg)
        elif args.command == "sir":
            run_sir(g, cfg)
        elif args.command == "eval":
            run_eval(g, cfg)
        print(f"{args.command}: outputs in {cfg.out}")
        return 0
    except (GraphParseError, DatasetMissingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
