"""Property suites run over corpora of generator specs.

Each suite maps one corpus item to a ``GraphResult``. Exact sub-solvers that
run out of budget turn the item into a ``timeout``; timeouts never count as
passes. Reports carry no timings, so repeated runs serialize identically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .bounds import (
    g_transform,
    is_alpha_bounded,
    jensen_toft_bound,
    kr_alpha_bound_holds,
    kr_chromatic_bound,
    kr_chromatic_bound_holds,
    kr_independence,
    kr_independent_set,
    power,
    preset,
    shearer_check,
)
from .coloring import chi, find_k_critical, has_clique_of_size, independence_number, is_independent, verify_cut_lemma
from .cycles import full_spectrum, longest_consecutive_run, odd_even_counts
from .errors import Budget, BudgetExceeded, InputError, PipelineError, PreconditionError
from .generators import GeneratorSpec, generate, parse_spec
from .graph import Graph, is_bipartite_with, is_cycle, is_triangle_free, vertex_cuts, write_dimacs
from .pipeline import consecutive_cycles_pipeline, nearly_3_connected, paths_all_lengths, splice_three_paths, splice_two_paths


@dataclass
class GraphResult:
    id: str
    status: str  # pass | fail | timeout | skip
    quantities: dict = field(default_factory=dict)
    message: str = ""

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status, **self.quantities}
        if self.message:
            out["message"] = self.message
        return out


@dataclass
class VerificationReport:
    suite: str
    results: list[GraphResult]

    def __post_init__(self):
        self.results = sorted(self.results, key=lambda r: r.id)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "timeout": 0, "skip": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def passed(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["pass"] > 0

    def failures(self) -> list[GraphResult]:
        return [r for r in self.results if r.status == "fail"]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "summary": self.summary,
            "results": [r.to_json() for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


# graph suites


def check_classical_bounds(g: Graph, budget: int | None) -> GraphResult:
    """Odd, even and consecutive cycle-length counts against floor formulas in chi."""
    k = chi(g, Budget(budget))
    if not 3 <= k <= 7:
        return GraphResult(g.name, "skip", {"chi": k}, "chi outside [3, 7]")
    spec = full_spectrum(g, budget=budget)
    if not spec.complete:
        return GraphResult(g.name, "timeout", {"chi": k, "inexact": spec.inexact_lengths})
    odd, even = odd_even_counts(spec)
    start, run = longest_consecutive_run(spec)
    need = {"odd": (k - 1) // 2, "even": k // 2 - 1, "run": (k - 1) // 2}
    ok = odd >= need["odd"] and even >= need["even"] and run >= need["run"]
    q = {"chi": k, "lengths": spec.lengths, "odd": odd, "even": even, "run": run, "run_start": start, "need": need}
    return GraphResult(g.name, _verdict(ok), q)


def check_cut_lemma(g: Graph, budget: int | None) -> GraphResult:
    """Components of a critical witness minus each minimum cut of size <= 2 keep chi >= k - |S|."""
    k = chi(g, Budget(budget))
    if k < 3:
        return GraphResult(g.name, "skip", {"chi": k}, "chi below 3")
    w = find_k_critical(g, k, Budget(budget))
    h = w.subgraph
    kappa = None
    for size in (1, 2):
        if h.n > size + 1 and vertex_cuts(h, size):
            kappa = size
            break
    if kappa is None:
        return GraphResult(g.name, "pass", {"chi": k, "critical_n": h.n, "cuts": 0}, "no minimum cut of size <= 2")
    bad = []
    cuts = vertex_cuts(h, kappa)
    for s in cuts:
        report = verify_cut_lemma(w, s, Budget(budget))
        if not report.holds:
            bad.append(sorted(h.to_original(sorted(s))))
    q = {"chi": k, "critical_n": h.n, "connectivity": kappa, "cuts": len(cuts)}
    return GraphResult(g.name, _verdict(not bad), q, f"violating cuts {bad}" if bad else "")


def check_nearly3(g: Graph, budget: int | None) -> GraphResult:
    k = chi(g, Budget(budget))
    if k < 4:
        return GraphResult(g.name, "skip", {"chi": k}, "chi below 4")
    try:
        out = nearly_3_connected(g, k, Budget(budget), check=True)
    except PipelineError as exc:
        return GraphResult(g.name, "fail", {"chi": k}, str(exc))
    q = {
        "chi": k,
        "already_3_connected": out.already_3_connected,
        "gstar_n": out.gstar.n,
        "estar": list(out.estar),
        "c_gstar": out.circumference_gstar,
        "c_g": out.circumference_g,
    }
    return GraphResult(g.name, "pass", q)


def check_pipeline(g: Graph, budget: int | None, k: int = 4) -> GraphResult:
    try:
        trace = consecutive_cycles_pipeline(g, k, Budget(budget))
    except PreconditionError as exc:
        return GraphResult(g.name, "skip", {"k": k}, str(exc))
    except PipelineError as exc:
        return GraphResult(g.name, "fail", {"k": k}, str(exc))
    problems = []
    for cyc in trace.cycles:
        local = [g.index_of(x) for x in cyc]
        if not is_cycle(g, local):
            problems.append(f"invalid cycle {cyc}")
    lengths = trace.lengths
    if lengths != list(range(lengths[0], lengths[0] + len(lengths))):
        problems.append(f"lengths {lengths} not consecutive")
    if len(lengths) < 3:
        problems.append(f"run {len(lengths)} < 3")
    chis = [s.chi for s in trace.stages]
    for stage, need in zip(trace.stages, (4 * k, 2 * k, k, k)):
        if stage.chi < need:
            problems.append(f"stage {stage.name} chi {stage.chi} < {need}")
    q = {"k": k, "lengths": lengths, "r": trace.r, "stage_chi": chis, "chorded_cycle_len": len(trace.chorded_cycle)}
    return GraphResult(g.name, _verdict(not problems), q, "; ".join(problems))


def check_shearer(g: Graph, budget: int | None) -> GraphResult:
    if not is_triangle_free(g):
        return GraphResult(g.name, "skip", {}, "contains a triangle")
    rep = shearer_check(g, Budget(budget))
    q = {"n": rep.n, "avg_degree": str(rep.average_degree), "alpha": rep.alpha, "bound": rep.bound, "vacuous": rep.vacuous}
    return GraphResult(g.name, _verdict(rep.holds), q)


def check_krfree(g: Graph, budget: int | None) -> GraphResult:
    """For r = 3, 4 with g K_r-free: the recursive independent set, the exact
    chromatic bound and the Jensen-Toft integral with the K_r-free independence profile."""
    k = chi(g, Budget(budget))
    alpha, _ = independence_number(g, Budget(budget))
    checked, problems = [], []
    for r in (3, 4):
        if has_clique_of_size(g, r, Budget(budget)) is not None:
            continue
        ind = kr_independent_set(g, r, Budget(budget))
        if not is_independent(g, ind) or not kr_alpha_bound_holds(len(ind), g.n, r):
            problems.append(f"r={r}: independent set {ind} too small or dependent")
        if not kr_alpha_bound_holds(alpha, g.n, r):
            problems.append(f"r={r}: alpha {alpha} below n^(1/(r-1)) - 1")
        if not kr_chromatic_bound_holds(k, g.n, r):
            problems.append(f"r={r}: chi {k} >= {kr_chromatic_bound(g.n, r):.3f}")
        jt = jensen_toft_bound(kr_independence(r), 1, g.n) if g.n > 1 else 1.0
        if jt < k:
            problems.append(f"r={r}: Jensen-Toft {jt:.3f} < chi {k}")
        checked.append({"r": r, "set_size": len(ind), "chi_bound": kr_chromatic_bound(g.n, r), "jensen_toft": jt})
    if not checked:
        return GraphResult(g.name, "skip", {"chi": k}, "contains K_3 and K_4")
    q = {"n": g.n, "chi": k, "alpha": alpha, "checks": checked}
    return GraphResult(g.name, _verdict(not problems), q, "; ".join(problems))


# generated-instance suites


def _single_chord_cycles(n: int):
    """C_n plus one chord {0, j}; every one-chord cycle is isomorphic to one of these."""
    ring = [(i, (i + 1) % n) for i in range(n)]
    for j in range(2, n // 2 + 1):
        yield j, Graph.from_edges(n, ring + [(0, j)], name=f"C{n}+0-{j}")


def _path_lengths_by_pair(h: Graph) -> dict[tuple[int, int], set[int]]:
    """Edge counts of all simple u-v paths, by exhaustive enumeration."""
    out: dict[tuple[int, int], set[int]] = {}

    def walk(path, seen):
        u, v = path[0], path[-1]
        if len(path) > 1:
            out.setdefault((u, v), set()).add(len(path) - 1)
        for w in h.adj[v]:
            if w not in seen:
                path.append(w)
                seen.add(w)
                walk(path, seen)
                seen.discard(w)
                path.pop()

    for s in range(h.n):
        walk([s], {s})
    return out


def check_chorded_cycles(n: int) -> GraphResult:
    """All one-chord cycles on n vertices and all nontrivial partitions (A, B)."""
    cases = bad = 0
    messages = []
    for j, h in _single_chord_cycles(n):
        oracle = _path_lengths_by_pair(h)
        for mask in range(1, (1 << n) - 1):
            a = [v for v in range(n) if mask >> v & 1]
            b = [v for v in range(n) if not mask >> v & 1]
            cases += 1
            real = set()
            for u in a:
                for v in b:
                    real |= oracle.get((u, v), set())
            bip = is_bipartite_with(h, a)
            expected_full = set(range(1, n))
            lemma_ok = real == expected_full if not bip else real == {x for x in expected_full if x % 2}
            try:
                res = paths_all_lengths(h, list(range(n)), a, b)
                got = set(res.paths)
                valid = all(
                    p[0] in a and p[-1] in b and len(p) == length + 1 and len(set(p)) == len(p)
                    and all(h.has_edge(x, y) for x, y in zip(p, p[1:]))
                    for length, p in res.paths.items()
                )
                agree = got == real and res.bipartite_exception == bip and valid
            except PipelineError:
                agree = False
            if not (lemma_ok and agree):
                bad += 1
                if len(messages) < 5:
                    messages.append(f"chord 0-{j} A={a}")
    q = {"n": n, "cases": cases, "failures": bad}
    return GraphResult(f"chorded-cycles:{n}", _verdict(bad == 0), q, "; ".join(messages))


def splice_instance(seed: int):
    """Two disjoint cycles plus 2..min(|C|,|C'|) disjoint paths of 1..3 edges."""
    rng = random.Random(seed)
    lc, lcp = rng.randint(3, 12), rng.randint(3, 12)
    ell = rng.randint(2, min(lc, lcp, 5))
    c = list(range(lc))
    cp = list(range(lc, lc + lcp))
    nxt = lc + lcp
    ends_c = rng.sample(c, ell)
    ends_cp = rng.sample(cp, ell)
    edges = [(c[i], c[(i + 1) % lc]) for i in range(lc)] + [(cp[i], cp[(i + 1) % lcp]) for i in range(lcp)]
    paths = []
    for x, y in zip(ends_c, ends_cp):
        inner = list(range(nxt, nxt + rng.randint(0, 2)))
        nxt += len(inner)
        p = [x, *inner, y]
        edges += list(zip(p, p[1:]))
        paths.append(p)
    return Graph.from_edges(nxt, edges, name=f"splice:{seed}"), c, cp, paths


def check_splice(seed: int) -> GraphResult:
    g, c, cp, paths = splice_instance(seed)
    ell = len(paths)
    two = splice_two_paths(c, cp, paths)
    need2 = Fraction(ell - 1, ell) * len(c) + Fraction(len(cp), 2)
    problems = []
    if not is_cycle(g, two):
        problems.append("two-path splice is not a cycle")
    if len(two) < need2:
        problems.append(f"two-path splice {len(two)} < {need2}")
    q = {"len_c": len(c), "len_cprime": len(cp), "ell": ell, "two": len(two), "two_bound": str(need2)}
    if ell >= 3:
        three = splice_three_paths(c, cp, *paths[:3])
        need3 = Fraction(2, 3) * (len(c) + len(cp))
        if not is_cycle(g, three):
            problems.append("three-path splice is not a cycle")
        if len(three) < need3:
            problems.append(f"three-path splice {len(three)} < {need3}")
        q.update(three=len(three), three_bound=str(need3))
    return GraphResult(g.name, _verdict(not problems), q, "; ".join(problems))


ALPHA_CASES = {
    # name: (profile factory, alpha to test, expected verdict)
    "x2logx@3": (lambda: preset("x2logx"), Fraction(3), True),
    "linear@1": (lambda: preset("linear"), Fraction(1), True),
    "square@2": (lambda: preset("square"), Fraction(2), True),
    "phi@1": (lambda: preset("phi"), Fraction(1), True),
    "constant@1": (lambda: preset("constant"), Fraction(1), True),
    "quartic@3": (lambda: power(4), Fraction(3), False),
    "quartic@4": (lambda: preset("quartic"), Fraction(4), True),
}


def check_alpha_case(name: str) -> GraphResult:
    """Grid check at the given alpha; positive cases also push g_transform through
    the (alpha + 1) check for x0 = 8."""
    make, alpha, expected = ALPHA_CASES[name]
    f = make()
    res = is_alpha_bounded(f, alpha=alpha)
    q = {"alpha": str(alpha), "bounded": res.ok, "expected": expected}
    ok = res.ok == expected
    if ok and expected:
        try:
            g = g_transform(f, 8)
            q["transform_bounded"] = bool(is_alpha_bounded(g))
        except PreconditionError as exc:
            ok = False
            q["transform_bounded"] = False
            return GraphResult(name, "fail", q, str(exc))
    return GraphResult(name, _verdict(ok), q)


# corpora

CLASSICAL_CORPUS = (
    "cycle:5", "cycle:7", "cycle:9", "petersen", "grotzsch",
    "mycielski:1", "mycielski:2", "mycielski:3", "mycielski:1@cycle:7", "mycielski:1@petersen",
    "kneser:5,2", "kneser:6,2", "kneser:7,2", "kneser:7,3",
    "complete:4", "complete:5", "complete:6", "complete:7",
    "wheel:5", "wheel:6", "wheel:7",
    "complete_multipartite:2,2,2", "complete_multipartite:1,2,3,4", "complete_multipartite:2,2,2,2,2",
    "complete_multipartite:3,3,3,3,3,3",
    "shift:5", "shift:8", "hajos:4", "hajos:5", "glued_cliques:5,2", "clique_join_cycle:3,5",
    "triangle_free_process:15,1", "triangle_free_process:20,2", "triangle_free_process:25,3",
)

CUT_CORPUS = (
    "cycle:5", "cycle:7", "cycle:9", "petersen", "grotzsch", "mycielski:2",
    "complete:4", "complete:5", "wheel:5", "wheel:7", "hajos:4", "hajos:5",
    "glued_cliques:4,2", "glued_cliques:5,2", "glued_cliques:4,1", "kneser:5,2", "kneser:7,2",
    "complete_multipartite:1,2,3,4", "theta:2,3,4",
)

NEARLY3_CORPUS = (
    "complete:4", "complete:5", "complete:6", "wheel:5", "wheel:7", "grotzsch", "mycielski:1@cycle:7",
    "hajos:4", "hajos:5", "glued_cliques:4,2", "glued_cliques:4,1", "glued_cliques:5,2",
    "clique_join_cycle:3,5", "kneser:7,2", "complete_multipartite:1,2,3,4",
)

PIPELINE_CORPUS = (
    "complete:16", "complete:18",
    "complete_multipartite:" + ",".join(["2"] * 16),
    "complete_multipartite:" + ",".join(str(i) for i in range(1, 17)),
    "clique_join_cycle:14,5",
)

TRIANGLE_FREE_CORPUS = (
    "cycle:5", "cycle:7", "cycle:9", "petersen", "grotzsch", "mycielski:3", "mycielski:1@cycle:7",
    "mycielski:1@petersen", "kneser:7,3", "shift:5", "shift:8",
    "triangle_free_process:15,1", "triangle_free_process:20,2", "triangle_free_process:25,3",
    "triangle_free_process:30,42", "triangle_free_process:40,7",
)

KRFREE_CORPUS = TRIANGLE_FREE_CORPUS + (
    "complete:3", "wheel:5", "wheel:6", "kneser:5,2", "kneser:6,2", "kneser:7,2",
    "complete_multipartite:2,2,2", "complete_multipartite:3,3,3", "clique_join_cycle:1,5",
)

CHORDED_CORPUS = tuple(f"cycle:{n}" for n in range(4, 10))

SPLICE_SEEDS = tuple(range(100))


@dataclass(frozen=True)
class Suite:
    name: str
    kind: str  # "graph" | "chorded" | "splice" | "alpha"
    default: tuple
    check: object = None


SUITES = {
    "classical-bounds": Suite("classical-bounds", "graph", CLASSICAL_CORPUS, check_classical_bounds),
    "cut-lemma": Suite("cut-lemma", "graph", CUT_CORPUS, check_cut_lemma),
    "nearly3": Suite("nearly3", "graph", NEARLY3_CORPUS, check_nearly3),
    "chorded-paths": Suite("chorded-paths", "chorded", CHORDED_CORPUS),
    "pipeline": Suite("pipeline", "graph", PIPELINE_CORPUS, check_pipeline),
    "splice": Suite("splice", "splice", SPLICE_SEEDS),
    "shearer": Suite("shearer", "graph", TRIANGLE_FREE_CORPUS, check_shearer),
    "krfree": Suite("krfree", "graph", KRFREE_CORPUS, check_krfree),
    "alpha-bounded": Suite("alpha-bounded", "alpha", tuple(ALPHA_CASES)),
}


def _as_spec(item) -> GeneratorSpec:
    if isinstance(item, GeneratorSpec):
        return item
    if isinstance(item, str):
        return parse_spec(item)
    return GeneratorSpec.from_json(item)


def load_corpus(path, suite: str | None = None) -> list:
    """Corpus items from a JSON file, or from ``<dir>/<suite>.json`` (falling back
    to every ``*.json`` in the directory).

    A file holds a list of items or an object with a ``graphs`` list. Graph
    suites take spec strings or spec objects; see ``verify_suite`` for the rest.
    """
    path = Path(path)
    if path.is_dir():
        own = path / f"{suite}.json" if suite else None
        files = [own] if own is not None and own.exists() else sorted(path.glob("*.json"))
    elif path.exists():
        files = [path]
    else:
        raise InputError(f"corpus {path} does not exist")
    items, seen = [], set()
    for f in files:
        try:
            data = json.loads(f.read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{f}: {exc}") from None
        for item in data.get("graphs", []) if isinstance(data, dict) else data:
            key = json.dumps(item, sort_keys=True)
            if key not in seen:
                seen.add(key)
                items.append(item)
    return items


def materialize(corpus, out_dir) -> list[Path]:
    """Write each corpus graph as DIMACS into ``out_dir``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for item in corpus:
        spec = _as_spec(item)
        fname = spec.id.replace(":", "_").replace(",", "-").replace("@", "_on_") + ".col"
        p = out_dir / fname
        p.write_text(write_dimacs(generate(spec)))
        written.append(p)
    return written


def _run_graph_item(suite: Suite, spec: GeneratorSpec, budget) -> GraphResult:
    g = generate(spec)
    try:
        return suite.check(g, budget)
    except BudgetExceeded as exc:
        return GraphResult(spec.id, "timeout", {}, str(exc))


def verify_suite(name: str, corpus=None, budget: int | None = None) -> VerificationReport:
    """Run suite ``name`` over ``corpus`` (default corpus when ``None``).

    For ``chorded-paths`` corpus items are ``cycle:n`` specs, for ``splice``
    integer seeds and for ``alpha-bounded`` case names.
    """
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    items = list(suite.default if corpus is None else corpus)
    results = []
    if suite.kind == "graph":
        for item in items:
            results.append(_run_graph_item(suite, _as_spec(item), budget))
    elif suite.kind == "chorded":
        for item in items:
            spec = _as_spec(item)
            if spec.family != "cycle":
                raise InputError("chorded-paths corpus items must be cycle:n specs")
            n = spec.params["n"]
            if not 4 <= n <= 12:
                raise InputError("chorded-paths handles cycles on 4..12 vertices")
            results.append(check_chorded_cycles(n))
    elif suite.kind == "splice":
        for item in items:
            if isinstance(item, GeneratorSpec):
                raise InputError("splice corpus items are integer seeds")
            results.append(check_splice(int(item)))
    else:
        for item in items:
            if item not in ALPHA_CASES:
                raise InputError(f"unknown alpha-bounded case {item!r}")
            results.append(check_alpha_case(item))
    return VerificationReport(name, results)
