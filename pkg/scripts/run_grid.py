#!/usr/bin/env python3
"""Sweep the verification grid and write JSON/CSV reports.

Thin wrapper over `ghcodes grid` kept as a runnable experiment script:

    python3 scripts/run_grid.py --max-size 65536 --out grid.json --csv grid.csv

Every admissible signature (t_1 >= 1, t_s >= 1, |C| within the cap) is
built, spanned, Gray-mapped, and checked against the expected invariants:
GH property, minimum distance n(p-1)/p, linearity classification, kernel
dimension.  Exit status 0 only if every signature passes.
"""

import argparse
import sys

from ghcodes.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", default="2,3")
    parser.add_argument("--s-values", default="2,3")
    parser.add_argument("--max-size", type=int, default=2**16)
    parser.add_argument("--quad-cap", type=int, default=2**12)
    parser.add_argument("--pairs", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", default=None, help="JSON report path")
    parser.add_argument("--csv", default=None, help="CSV summary path")
    args = parser.parse_args()

    argv = [
        "grid",
        "--primes", args.primes,
        "--s-values", args.s_values,
        "--max-size", str(args.max_size),
        "--quad-cap", str(args.quad_cap),
        "--pairs", str(args.pairs),
        "--seed", str(args.seed),
    ]
    if args.out:
        argv += ["--out", args.out]
    if args.csv:
        argv += ["--csv", args.csv]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
