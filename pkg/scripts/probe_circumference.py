"""Exploratory: circumference and longest consecutive run of triangle-free
process graphs against their chromatic number.

For each n and seed it prints chi, the exact circumference and the longest
run of consecutive cycle lengths next to the k^2 log k scale (k = chi) that
the asymptotic bounds are stated in. At these sizes chi stays tiny, so the
comparison is only a sanity check of orders of magnitude.

    python scripts/probe_circumference.py --n 12 16 20 --seeds 5
"""

import argparse
import math

from cyclespec.coloring import chi
from cyclespec.cycles import full_spectrum, longest_consecutive_run
from cyclespec.errors import BudgetExceeded
from cyclespec.generators import triangle_free_process


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[12, 16, 20])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()
    print(f"{'n':>4} {'seed':>5} {'m':>4} {'chi':>4} {'circ':>5} {'run':>9} {'k^2 log k':>10}")
    for n in args.n:
        for seed in range(args.seeds):
            g = triangle_free_process(n, seed)
            try:
                k = chi(g, args.budget)
                spec = full_spectrum(g, budget=args.budget)
            except BudgetExceeded:
                print(f"{n:4d} {seed:5d} {g.m:4d}  budget exhausted")
                continue
            start, run = longest_consecutive_run(spec)
            flag = "" if spec.complete else "  (inexact)"
            scale = k * k * math.log(k) if k > 1 else 0.0
            print(f"{n:4d} {seed:5d} {g.m:4d} {k:4d} {spec.circumference:5d} {start:4d}+{run:<4d} {scale:10.2f}{flag}")


if __name__ == "__main__":
    main()
