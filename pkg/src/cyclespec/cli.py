"""Command-line entry point: ``cyclespec {analyze,spectrum,pipeline,generate,verify,bounds}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from .coloring import chromatic_number, independence_number
from .cycles import full_spectrum
from .errors import Budget, BudgetExceeded, InputError, PipelineError
from .generators import generate, parse_spec
from .graph import Graph, girth, graph_to_json, is_triangle_free, read_graph_text, write_dimacs
from .pipeline import consecutive_cycles_pipeline, extract_long_cycle
from .suites import SUITES, load_corpus, materialize, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def load_graph(source: str) -> Graph:
    """A DIMACS / JSON file path, or a generator spec such as ``kneser:5,2``."""
    path = Path(source)
    if path.is_file():
        return read_graph_text(path.read_text(), name=path.stem)
    return generate(parse_spec(source))


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    sys.stdout.write(text)


def analysis(g: Graph, spectrum: bool = False, max_len: int | None = None, budget: int | None = None) -> dict:
    cert = chromatic_number(g, Budget(budget))
    alpha, indep = independence_number(g, Budget(budget))
    gi = girth(g)
    out = {
        "name": g.name,
        "n": g.n,
        "m": g.m,
        "chi": cert.k,
        "coloring": list(cert.colors),
        "alpha": alpha,
        "independent_set": indep,
        "girth": None if math.isinf(gi) else int(gi),
        "triangle_free": is_triangle_free(g),
    }
    if spectrum:
        out["spectrum"] = full_spectrum(g, max_len, budget).to_json()
    return out


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    report = analysis(g, args.spectrum or args.command == "spectrum", args.max_len, args.budget)
    _emit(report, args.json)
    # a partial spectrum is still printed, but flagged through the exit code
    return EXIT_BUDGET if "inexact" in report.get("spectrum", {}) else EXIT_OK


def cmd_pipeline(args) -> int:
    g = load_graph(args.graph)
    budget = Budget(args.budget)
    if args.mode == "consecutive":
        trace = consecutive_cycles_pipeline(g, args.k, budget)
        result = {"mode": "consecutive", "k": args.k, "r": trace.r, "lengths": trace.lengths, "cycles": trace.cycles}
        if args.trace:
            Path(args.trace).write_text(json.dumps(trace.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        profile = B.preset(args.profile)
        res = extract_long_cycle(g, args.k, profile, args.x0, Fraction(args.eta), budget)
        result = {"mode": "long", **res.to_json()}
        if args.trace:
            Path(args.trace).write_text(json.dumps(res.to_json(), indent=2, sort_keys=True) + "\n")
    _emit(result)
    return EXIT_OK


def cmd_generate(args) -> int:
    text = args.family
    if args.params:
        text += ":" + ",".join(str(p) for p in args.params)
    if args.seed is not None:
        if not text.startswith("triangle_free_process"):
            raise InputError("--seed only applies to triangle_free_process")
        text += f",{args.seed}"
    g = generate(parse_spec(text))
    if args.out and args.out.endswith(".json"):
        body = json.dumps(graph_to_json(g), indent=2) + "\n"
    else:
        body = write_dimacs(g)
    if args.out:
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = load_corpus(args.corpus, args.suite) if args.corpus else None
    if args.materialize:
        items = corpus if corpus is not None else SUITES[args.suite].default
        if SUITES[args.suite].kind != "graph":
            raise InputError(f"suite {args.suite} has no graph corpus to materialize")
        materialize(items, args.materialize)
    report = verify_suite(args.suite, corpus, args.budget)
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    if report.summary["fail"]:
        return EXIT_FAIL
    if report.summary["timeout"]:
        return EXIT_BUDGET
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"--theorem {args.theorem} needs " + ", ".join("--" + n for n in missing))


def bounds_report(args) -> dict:
    t = args.theorem
    if t == "main":
        _need(args, "k", "eps")
        pred = B.theorem_predictions(args.k, args.eps)
        log_k0 = B.main_threshold_log(args.eps)
        valid = None if log_k0 is None or log_k0 > 700 else math.exp(log_k0)
        key = "circumference" if args.quantity == "cycle" else "consecutive_run"
        return {"name": f"main:{key}", "params": {"k": args.k, "eps": args.eps}, "value": pred[key], "valid_from_k": valid}
    if t == "main1":
        _need(args, "k", "eps")
        f = B.preset(args.profile)
        pred = B.main1_predictions(f, args.k, args.eps, args.m)
        key = "cycle" if args.quantity == "cycle" else "consecutive_run"
        params = {"k": args.k, "eps": args.eps, "m": args.m, "profile": f.name}
        return {"name": f"main1:{key}", "params": params, "value": pred[key], "valid_from_k": pred["k1"]}
    if t == "main2":
        _need(args, "k", "r")
        value = B.theorem_predictions(args.k, 0.125, args.r)["kr_free_cycle"]
        return {"name": "main2:order", "params": {"k": args.k, "r": args.r}, "value": value, "valid_from_k": None}
    if t == "shearer":
        _need(args, "n", "d")
        return {"name": "shearer", "params": {"n": args.n, "d": args.d}, "value": B.shearer_bound(args.n, args.d), "valid_from_k": None}
    if t == "jt":
        _need(args, "n")
        f = B.preset(args.profile)
        value = B.jensen_toft_bound(f, args.s, args.n)
        params = {"n": args.n, "s": args.s, "profile": f.name}
        return {"name": "jensen_toft", "params": params, "value": value, "valid_from_k": None}
    if t == "order":
        _need(args, "k", "delta")
        ob = B.triangle_free_order_bound(int(args.k), args.delta)
        return {"name": "triangle_free_order", "params": {"k": args.k, "delta": args.delta}, "value": ob.value, "valid_from_k": ob.valid_from_k}
    raise InputError(f"unknown theorem {t!r}")


def cmd_bounds(args) -> int:
    _emit(bounds_report(args))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclespec", description="Chromatic number versus cycle lengths: exact checks.")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("analyze", "spectrum"):
        a = sub.add_parser(name, help="chi, alpha, girth and (optionally) the cycle spectrum of a graph")
        a.add_argument("graph", help="DIMACS/JSON file or generator spec, e.g. kneser:5,2")
        a.add_argument("--spectrum", action="store_true", help="also compute the full cycle spectrum")
        a.add_argument("--max-len", type=int, default=None)
        a.add_argument("--budget", type=int, default=None, help="node expansions per exact call")
        a.add_argument("--json", default=None, metavar="OUT", help="also write the report here")
        a.set_defaults(func=cmd_analyze)

    pl = sub.add_parser("pipeline", help="run the consecutive-cycles or long-cycle construction")
    pl.add_argument("graph")
    pl.add_argument("--k", type=int, required=True)
    pl.add_argument("--mode", choices=("consecutive", "long"), default="consecutive")
    pl.add_argument("--x0", type=int, default=8, help="base-case threshold for --mode long")
    pl.add_argument("--eta", default="1/4", help="slack for --mode long (rational, e.g. 1/4)")
    pl.add_argument("--profile", default="linear", choices=sorted(B.PRESETS))
    pl.add_argument("--trace", default=None, metavar="OUT")
    pl.add_argument("--budget", type=int, default=None)
    pl.set_defaults(func=cmd_pipeline)

    g = sub.add_parser("generate", help="write a generated graph as DIMACS (or JSON with --out *.json)")
    g.add_argument("family", help="family name or full spec, e.g. kneser or kneser:5,2")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run a property suite over a corpus")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--corpus", default=None, help="corpus directory or JSON file (default: built-in corpus)")
    v.add_argument("--materialize", default=None, metavar="DIR", help="dump corpus graphs as DIMACS into DIR")
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="evaluate closed-form bounds")
    b.add_argument("--theorem", required=True, choices=("main", "main1", "main2", "shearer", "jt", "order"))
    b.add_argument("--k", type=float, default=None)
    b.add_argument("--eps", type=float, default=None)
    b.add_argument("--m", type=float, default=3)
    b.add_argument("--r", type=int, default=None)
    b.add_argument("--n", type=float, default=None)
    b.add_argument("--d", type=float, default=None)
    b.add_argument("--s", type=float, default=1)
    b.add_argument("--delta", type=float, default=None)
    b.add_argument("--profile", default="x2logx", choices=sorted(B.PRESETS))
    b.add_argument("--quantity", choices=("cycle", "run"), default="cycle")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        json.dump({"error": "budget", "message": str(exc), "lower": exc.lower, "upper": exc.upper}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        sys.stderr.write(f"cyclespec: error: {exc}\n")
        return EXIT_INPUT
    except PipelineError as exc:
        sys.stderr.write(f"cyclespec: pipeline failed: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
