"""Remainder sweep over a log grid, written as CSV.

    python scripts/run_sweep.py --x-grid 10.5:10000.5:log:6 --T 2000 > sweep.csv
"""
import argparse
import sys

from pntverify import harness
from pntverify.cli import parse_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x-grid", type=parse_grid, default=parse_grid("10.5:10000.5:log:6"))
    ap.add_argument("--T", type=float, default=2000.0)
    ap.add_argument("--t-mode", choices=("fixed", "policy"), default="fixed")
    args = ap.parse_args()
    cfg = harness.SweepConfig(x_grid=args.x_grid, t_mode=args.t_mode,
                              T=args.T if args.t_mode == "fixed" else None)
    recs = harness.sweep(cfg)
    sys.stdout.write(harness.emit(recs, "csv"))
    for r in recs:
        f1, f2 = harness.envelope_factors(r)
        print(f"x={r.x:<10g} |r1|/bound={f1:.3g} |r2|/bound={f2:.3g} {r.regime}", file=sys.stderr)


if __name__ == "__main__":
    main()
