"""Write the built-in graph corpora to corpus/<suite>.json.

    python scripts/write_corpus.py [--out corpus]
"""

import argparse
import json
from pathlib import Path

from cyclespec.suites import SUITES


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, suite in sorted(SUITES.items()):
        if suite.kind != "graph":
            continue
        body = {"suite": name, "graphs": list(suite.default)}
        (out / f"{name}.json").write_text(json.dumps(body, indent=2) + "\n")
        print(f"{name}: {len(suite.default)} graphs")


if __name__ == "__main__":
    main()
