"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict. The lines are printed in the
pytest terminal summary (see conftest.py) and by ``python tests/test_acceptance.py``.
"""

import time
from fractions import Fraction

import pytest

from cyclespec.bounds import g_transform, is_alpha_bounded, jensen_toft_bound, constant, power, shearer_phi, x2logx
from cyclespec.cli import main
from cyclespec.coloring import chi
from cyclespec.generators import generate, parse_spec
from cyclespec.suites import SUITES, verify_suite

VERDICTS: list[str] = []

CLASSICAL_SECONDS = 120
CHORDED_SECONDS = 180
PIPELINE_SECONDS_PER_GRAPH = 300

# named members the classical corpus must contain
CLASSICAL_REQUIRED = (
    "cycle:5", "petersen", "grotzsch", "mycielski:3", "kneser:5,2", "kneser:7,3",
    "complete:4", "complete:5", "complete:6", "complete:7",
)


def _record(number: int, title: str, ok: bool, detail: str) -> None:
    VERDICTS.append(f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}")


def _graph_union():
    specs = set()
    for suite in SUITES.values():
        if suite.kind == "graph":
            specs.update(suite.default)
    return sorted(specs)


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_1_classical_bounds():
    report, secs = _timed(verify_suite, "classical-bounds")
    s = report.summary
    corpus = SUITES["classical-bounds"].default
    missing = [x for x in CLASSICAL_REQUIRED if x not in corpus]
    ok = s["fail"] == 0 and s["timeout"] == 0 and s["pass"] >= 25 and not missing and secs < CLASSICAL_SECONDS
    _record(1, "classical bounds", ok, f"{s['pass']} pass, {s['fail']} fail, {s['timeout']} timeout, {secs:.1f}s")
    assert not missing, missing
    assert s["pass"] >= 25 and s["fail"] == 0 and s["timeout"] == 0, report.failures()
    assert secs < CLASSICAL_SECONDS


def test_2_chorded_path_lemma():
    report, secs = _timed(verify_suite, "chorded-paths")
    s = report.summary
    sizes = sorted(r.quantities.get("n") for r in report.results)
    ok = s["fail"] == 0 and s["pass"] == 6 and secs < CHORDED_SECONDS
    _record(2, "chorded-path lemma", ok, f"cycles on {sizes[0]}..{sizes[-1]} vertices, {s['pass']} pass, {secs:.1f}s")
    assert s["pass"] == 6 and s["fail"] == 0, report.failures()
    assert secs < CHORDED_SECONDS


def test_3_nearly_3_connected():
    report = verify_suite("nearly3", _graph_union())
    s = report.summary
    ok = s["fail"] == 0 and s["timeout"] == 0 and s["pass"] > 0
    _record(3, "nearly-3-connected reduction", ok, f"{s['pass']} graphs with chi >= 4, {s['fail']} fail, {s['timeout']} timeout")
    assert ok, report.failures()


def test_4_cut_lemma():
    report = verify_suite("cut-lemma", _graph_union())
    s = report.summary
    cuts = sum(r.quantities.get("cuts", 0) for r in report.results)
    ok = s["fail"] == 0 and s["timeout"] == 0 and s["pass"] > 0
    _record(4, "cut lemma", ok, f"{s['pass']} witnesses, {cuts} minimum cuts, {s['fail']} fail")
    assert ok, report.failures()


def test_5_splicing():
    report = verify_suite("splice")
    s = report.summary
    three = sum(1 for r in report.results if "three" in r.quantities)
    ok = s["fail"] == 0 and s["pass"] == 100
    _record(5, "splicing inequalities", ok, f"{s['pass']}/100 seeds, {three} with three paths")
    assert ok, report.failures()


def test_6_pipeline():
    corpus = SUITES["pipeline"].default
    slow, results = [], []
    for spec in corpus:
        assert chi(generate(parse_spec(spec))) >= 16
        report, secs = _timed(verify_suite, "pipeline", [spec])
        results.extend(report.results)
        if secs >= PIPELINE_SECONDS_PER_GRAPH:
            slow.append(spec)
    passed = sum(r.status == "pass" for r in results)
    ok = len(corpus) >= 5 and passed == len(corpus) and not slow
    runs = sorted(len(r.quantities.get("lengths", [])) for r in results)
    _record(6, "pipeline validity", ok, f"{passed}/{len(corpus)} graphs with chi >= 16, runs {runs}")
    assert ok, [r for r in results if r.status != "pass"] or slow


def test_7_numeric_bounds():
    checks = {
        "phi(100)": abs(shearer_phi(100) - 15.174) <= 1e-3,
        "g(3)": g_transform(power(2), 3)(Fraction(3)) == Fraction(9, 4),
        "jensen-toft": abs(jensen_toft_bound(constant(), 1, 10) - 10) <= 1e-6,
        "x2logx 3-bounded": bool(is_alpha_bounded(x2logx(), alpha=3)),
        "x^4 not 3-bounded": not is_alpha_bounded(power(4), alpha=3),
    }
    bad = [k for k, v in checks.items() if not v]
    _record(7, "numeric bounds", not bad, "all exact values reproduced" if not bad else f"mismatch: {bad}")
    assert not bad


def test_8_kr_free():
    report = verify_suite("krfree")
    s = report.summary
    ok = s["fail"] == 0 and s["timeout"] == 0 and s["pass"] > 0
    _record(8, "K_r-free suite", ok, f"{s['pass']} graphs, {s['fail']} fail, {s['timeout']} timeout")
    assert ok, report.failures()


def test_9_determinism(tmp_path, capsys):
    outs = []
    for i in range(2):
        target = tmp_path / f"run{i}.json"
        code = main(["verify", "--suite", "classical-bounds", "--out", str(target)])
        capsys.readouterr()
        outs.append((code, target.read_bytes()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    _record(9, "determinism", ok, f"two verify runs, {len(outs[0][1])} bytes, identical={outs[0][1] == outs[1][1]}")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
