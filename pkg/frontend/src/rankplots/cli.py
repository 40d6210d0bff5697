"""Plot CLI: render one figure id from cyclerank CSV tables."""

from __future__ import annotations

import argparse
import sys

from .figures import FIGURE_IDS, FigureSpec, render
from .tables import SchemaError


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclerank-plot",
        description="Render experiment figures from cyclerank CSV outputs.")
    ap.add_argument("--figure", required=True, choices=FIGURE_IDS)
    ap.add_argument("--in", dest="inputs", required=True, nargs="+",
                    help="input CSV table(s) for the figure id")
    ap.add_argument("--out", required=True, help="output image path")
    ap.add_argument("--style", help="matplotlib style file (pinned default)")
    ap.add_argument("--beta-mult", type=float, dest="beta_mult",
                    help="sir_vs_c: beta multiplier to slice")
    ap.add_argument("--fraction", type=float,
                    help="sir_vs_beta: seed fraction to slice")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(figure_id=args.figure, inputs=tuple(args.inputs),
                      output=args.out, style=args.style,
                      beta_mult=args.beta_mult, fraction=args.fraction)
    try:
        info = render(spec)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {info['output']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
