"""Run every property suite on its built-in corpus and print one summary line each.

    python scripts/run_suites.py [--suite NAME ...] [--budget N] [--out DIR]

With --out, each report is also written to DIR/<suite>.json.
"""

import argparse
import time
from pathlib import Path

from cyclespec.suites import SUITES, verify_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--suite", action="append", choices=sorted(SUITES))
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    failed = False
    for name in args.suite or list(SUITES):
        start = time.perf_counter()
        report = verify_suite(name, budget=args.budget)
        secs = time.perf_counter() - start
        s = report.summary
        print(f"{name:18s} pass={s['pass']:3d} fail={s['fail']} timeout={s['timeout']} skip={s['skip']:2d} {secs:6.1f}s")
        for r in report.failures():
            print(f"    {r.id}: {r.message}")
        if out:
            (out / f"{name}.json").write_text(report.dumps())
        failed |= not report.passed
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
