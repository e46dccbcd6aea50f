"""Closed-form bounds: alpha-bounded functions, Shearer, Jensen-Toft, K_r-free.

Float comparisons carry a relative slack of ``SLACK``; evaluators fed
``Fraction`` arguments stay exact where the formula is rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .coloring import has_clique_of_size, independence_number, is_independent
from .errors import InputError, PreconditionError, as_budget
from .graph import Graph, induced_subgraph, is_triangle_free

SLACK = 1e-9
E = math.e


def _log(x):
    if isinstance(x, np.ndarray):
        return np.log(x)
    return math.log(x)


def log_grid(lo: float, hi: float, count: int) -> tuple[float, ...]:
    pts = np.geomspace(lo, hi, count)
    pts[0], pts[-1] = lo, hi
    return tuple(float(x) for x in pts)


DEFAULT_GRID = log_grid(3.0, 1e6, 200)


@dataclass(frozen=True)
class BoundProfile:
    """A positive non-decreasing function on [domain_start, oo) with its claimed
    alpha-boundedness exponent."""

    name: str
    evaluator: Callable = field(compare=False)
    alpha: Fraction | float = 1
    domain_start: float = 3
    grid: tuple = DEFAULT_GRID

    def __call__(self, x):
        return self.evaluator(x)


def power(p: int | Fraction, c=1, name: str | None = None) -> BoundProfile:
    """c * x**p; exact on rationals when p is an integer."""
    if isinstance(p, int) or (isinstance(p, Fraction) and p.denominator == 1):
        p = int(p)
        return BoundProfile(name or f"{c}*x^{p}", lambda x: c * x**p, max(Fraction(p), Fraction(1)))
    pf = float(p)
    return BoundProfile(name or f"{c}*x^{p}", lambda x: c * _to_float(x) ** pf, max(Fraction(p), Fraction(1)))


def _to_float(x):
    return x if isinstance(x, np.ndarray) else float(x)


def x2logx(c=1) -> BoundProfile:
    """c * x^2 log x, which is 3-bounded."""
    return BoundProfile(f"{c}*x^2*log(x)", lambda x: float(c) * _to_float(x) ** 2 * _log(_to_float(x)), Fraction(3))


def constant(c=1) -> BoundProfile:
    return BoundProfile(f"const {c}", lambda x: c + 0 * x, Fraction(1))


def linear() -> BoundProfile:
    return BoundProfile("x", lambda x: x, Fraction(1))


def shearer_phi(x):
    """(x log x / 2) ** 0.5, natural logarithm."""
    if isinstance(x, np.ndarray):
        return np.sqrt(0.5 * x * np.log(x))
    if x < 1:
        raise InputError("phi is defined for x >= 1")
    return math.sqrt(0.5 * float(x) * math.log(x))


def phi_profile() -> BoundProfile:
    return BoundProfile("phi", shearer_phi, Fraction(1))


def kr_free_order(r: int) -> BoundProfile:
    """(x/4) ** (r/(r-1)): order lower bound for k-chromatic K_{r+1}-free graphs."""
    if r < 3:
        raise InputError("r must be at least 3")
    e = r / (r - 1)
    return BoundProfile(f"(x/4)^({r}/{r - 1})", lambda x: (_to_float(x) / 4) ** e, Fraction(r, r - 1))


def kr_independence(r: int) -> BoundProfile:
    """max(1, x^(1/(r-1)) - 1): independence lower bound for K_r-free graphs."""
    e = 1 / (r - 1)

    def f(x):
        x = _to_float(x)
        if isinstance(x, np.ndarray):
            return np.maximum(1.0, x**e - 1.0)
        return max(1.0, x**e - 1.0)

    return BoundProfile(f"max(1,x^(1/{r - 1})-1)", f, Fraction(1), domain_start=1)


def triangle_free_order(delta) -> BoundProfile:
    c = Fraction(1, 4) - Fraction(delta)
    return BoundProfile(f"({c})*x^2*log(x)", x2logx(float(c)).evaluator, Fraction(3))


PRESETS = {
    "x2logx": x2logx,
    "linear": linear,
    "constant": constant,
    "phi": phi_profile,
    "square": lambda: power(2),
    "quartic": lambda: power(4),
}


def preset(name: str, **kwargs) -> BoundProfile:
    if name not in PRESETS:
        raise InputError(f"unknown profile {name!r}; choose from {', '.join(sorted(PRESETS))}")
    return PRESETS[name](**kwargs)


# alpha-boundedness


def _ge(lhs, rhs) -> bool:
    """lhs >= rhs, exactly for rationals, with relative slack otherwise."""
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        return lhs >= rhs
    lhs, rhs = float(lhs), float(rhs)
    return lhs >= rhs - SLACK * max(abs(lhs), abs(rhs), 1.0)


def _pow(x, a):
    if isinstance(a, Fraction) and a.denominator == 1 and isinstance(x, (int, Fraction)):
        return Fraction(x) ** int(a)
    return float(x) ** float(a)


@dataclass(frozen=True)
class AlphaCheck:
    ok: bool
    alpha: Fraction | float
    violation: tuple | None = None
    kind: str = ""

    def __bool__(self):
        return self.ok


def is_alpha_bounded(f: BoundProfile, grid=None, alpha=None) -> AlphaCheck:
    """Check positivity, monotonicity and y^a f(x) >= x^a f(y) over all grid pairs y >= x."""
    pts = list(f.grid if grid is None else grid)
    a = f.alpha if alpha is None else alpha
    if any(x < 3 for x in pts):
        raise InputError("grid points must be >= 3")
    if pts != sorted(pts):
        raise InputError("grid must be sorted")
    vals = [f(x) for x in pts]
    for x, v in zip(pts, vals):
        if not v > 0:
            return AlphaCheck(False, a, (x,), "positive")
    for i in range(len(pts) - 1):
        if not _ge(vals[i + 1], vals[i]):
            return AlphaCheck(False, a, (pts[i], pts[i + 1]), "monotone")
    powers = [_pow(x, a) for x in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if not _ge(powers[j] * vals[i], powers[i] * vals[j]):
                return AlphaCheck(False, a, (pts[i], pts[j]), "ratio")
    return AlphaCheck(True, a)


def g_transform(f: BoundProfile, x0) -> BoundProfile:
    """g(x) = x f(x) / (x + f(x0)), claimed (alpha + 1)-bounded with g <= f and g(x) <= x on [3, x0].

    All three properties are verified on ``f.grid`` (plus the integers in
    [3, x0] when that range is small).
    """
    if x0 < 1:
        raise InputError("x0 must be >= 1")
    fx0 = f(x0)

    def g(x):
        return x * f(x) / (x + fx0)

    out = BoundProfile(f"g[{f.name}; x0={x0}]", g, f.alpha + 1, f.domain_start, f.grid)
    check = is_alpha_bounded(out)
    if not check:
        raise PreconditionError(f"transform is not {out.alpha}-bounded at {check.violation}: is f {f.alpha}-bounded?")
    low = [x for x in f.grid if x <= x0]
    if x0 <= 10_000:
        low += list(range(3, int(x0) + 1))
    for x in low:
        if not _ge(x, g(x)):
            raise PreconditionError(f"g({x}) > {x}")
    for x in f.grid:
        if not _ge(f(x), g(x)):
            raise PreconditionError(f"g({x}) > f({x})")
    return out


# Shearer and Jensen-Toft


@dataclass(frozen=True)
class ShearerReport:
    n: int
    average_degree: Fraction
    bound: float
    alpha: int
    vacuous: bool
    holds: bool


def shearer_bound(n, d) -> float:
    """n log(d/e) / d (nonpositive, hence vacuous, when d <= e)."""
    d = float(d)
    if d <= 0:
        return 0.0
    return n * math.log(d / E) / d


def shearer_check(g: Graph, budget=None) -> ShearerReport:
    """Exact independence number against n log(d/e)/d for a triangle-free graph."""
    if not is_triangle_free(g):
        raise InputError("Shearer's bound needs a triangle-free graph")
    if g.n == 0:
        raise InputError("empty graph")
    d = Fraction(2 * g.m, g.n)
    alpha, _ = independence_number(g, as_budget(budget))
    bound = shearer_bound(g.n, d)
    vacuous = d <= E
    holds = alpha > bound + SLACK * max(1.0, abs(bound))
    return ShearerReport(g.n, d, bound, alpha, vacuous, holds)


def jensen_toft_bound(psi: BoundProfile, s, n, rel_tol: float = 1e-9, max_points: int = 1 << 20) -> float:
    """s + integral_s^n dx / psi(x) as a guaranteed over-estimate.

    ``psi`` is non-decreasing, so on every interval the left endpoint gives an
    upper bound for 1/psi (upper Darboux sum). Each round bisects the intervals
    with the largest upper-lower gap until the total gap is within ``rel_tol``
    of the sum or ``max_points`` is reached.
    """
    s, n = float(s), float(n)
    if not (1 <= s <= n):
        raise InputError("need 1 <= s <= n")
    if n == s:
        return s
    xs = np.linspace(s, n, 1025)
    while True:
        vals = np.asarray(psi(xs), dtype=float) * np.ones_like(xs)
        if not np.all(vals > 0):
            raise InputError("psi must be positive on [s, n]")
        if np.any(np.diff(vals) < -SLACK * np.abs(vals[1:])):
            raise InputError("psi must be non-decreasing on [s, n]")
        w = np.diff(xs)
        inv = 1.0 / vals
        upper = float(np.sum(w * inv[:-1]))
        gaps = w * (inv[:-1] - inv[1:])
        target = rel_tol * max(1.0, upper)
        if float(np.sum(gaps)) <= target or len(xs) >= max_points:
            return s + upper
        # bisect the widest-gap intervals that together hold half the total gap
        order = np.argsort(-gaps, kind="stable")
        count = int(np.searchsorted(np.cumsum(gaps[order]), 0.5 * float(np.sum(gaps)))) + 1
        split = np.zeros(len(gaps), dtype=bool)
        split[order[:count]] = True
        mids = (xs[:-1][split] + xs[1:][split]) / 2
        xs = np.sort(np.concatenate([xs, mids]))


def gamma(x: float) -> float:
    return 0.5 - 0.5 / math.log(E * x)


def phi_antiderivative(x: float) -> float:
    """x^(1/2) (log ex)^(-1/2)."""
    return math.sqrt(x) / math.sqrt(math.log(E * x))


def triangle_free_chi_upper(n: float, s: float) -> float:
    """Closed form s + (sqrt 2 / gamma(s)) n^(1/2) (log en)^(-1/2) for triangle-free
    graphs with n >= s >= e^(2e^3)."""
    return s + math.sqrt(2) / gamma(s) * phi_antiderivative(n)


@dataclass(frozen=True)
class OrderBound:
    value: float
    delta: float
    trivial: bool
    log_valid_from_k: float
    valid_from_k: float | None
    below_threshold: bool


def order_threshold_log(delta: float) -> float:
    """log of k2(delta) = s^4, s = ceil(max(e^(2e^3), e^(1/delta)))."""
    log_s = max(2 * E**3, 1 / delta)
    if log_s < 700:
        return 4 * math.log(math.ceil(math.exp(log_s)))
    return 4 * log_s


def triangle_free_order_bound(k: int, delta: float) -> OrderBound:
    """(1/4 - delta) k^2 log k and the order k2(delta) from which it is proved."""
    if delta <= 0:
        raise InputError("delta must be positive")
    if k < 3:
        raise InputError("k must be at least 3")
    value = (0.25 - delta) * k * k * math.log(k)
    if delta >= 0.25:
        return OrderBound(value, delta, True, math.log(3), 3.0, False)
    log_k2 = order_threshold_log(delta)
    k2 = math.exp(log_k2) if log_k2 < 709 else None
    return OrderBound(value, delta, False, log_k2, k2, math.log(k) < log_k2)


# K_r-free graphs


def _iroot_ge(value: int, n: int, r: int) -> bool:
    """value >= n^(1/(r-1)), exactly."""
    return value >= 0 and value ** (r - 1) >= n


def kr_independent_set(g: Graph, r: int, budget=None) -> list[int]:
    """Independent set of size >= n^(1/(r-1)) - 1 in a K_r-free graph, by the
    high-degree-neighborhood / greedy-coloring recursion."""
    if r < 3:
        raise InputError("r must be at least 3")
    if has_clique_of_size(g, r, budget) is not None:
        raise InputError(f"graph contains K_{r}")
    result = _kr_rec(g, list(range(g.n)), r)
    if not is_independent(g, result):
        raise AssertionError("recursion returned a dependent set")
    if not _iroot_ge(len(result) + 1, g.n, r):
        raise AssertionError("independent set below n^(1/(r-1)) - 1")
    return sorted(result)


def _kr_rec(g: Graph, verts: list[int], r: int) -> list[int]:
    n = len(verts)
    if n == 0:
        return []
    if n <= 2 ** (r - 1):
        return [verts[0]]
    inside = set(verts)
    deg = {v: sum(1 for w in g.adj[v] if w in inside) for v in verts}
    # high degree: d >= n^((r-2)/(r-1)), i.e. d^(r-1) >= n^(r-2)
    for v in verts:
        if deg[v] ** (r - 1) >= n ** (r - 2):
            nbhd = [w for w in g.adj[v] if w in inside]
            if r == 3:
                return nbhd
            return _kr_rec(g, nbhd, r - 1)
    sub = induced_subgraph(g, verts)
    colors = [-1] * sub.n
    for v in range(sub.n):
        taken = {colors[w] for w in sub.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    best = max(classes.values(), key=len)
    return [verts[v] for v in best]


def kr_chromatic_bound(n: int, r: int) -> float:
    """4 n^(1 - 1/(r-1))."""
    if n < 1 or r < 3:
        raise InputError("need n >= 1 and r >= 3")
    return 4 * n ** (1 - 1 / (r - 1))


def kr_chromatic_bound_holds(chi: int, n: int, r: int) -> bool:
    """chi < 4 n^((r-2)/(r-1)), compared exactly in integers."""
    return chi ** (r - 1) < 4 ** (r - 1) * n ** (r - 2)


def kr_alpha_bound_holds(alpha: int, n: int, r: int) -> bool:
    return _iroot_ge(alpha + 1, n, r)


# theorem-level predictions


def _safe(fn):
    try:
        v = fn()
    except OverflowError:
        return None
    return v if math.isfinite(v) else None


def theorem_predictions(k: float, eps: float, r: int | None = None) -> dict:
    """Circumference and consecutive-run predictions for triangle-free k-chromatic
    graphs, plus the K_{r+1}-free order bound (k/4)^(r/(r-1)) when ``r`` is given."""
    if not 0 < eps < 0.25:
        raise InputError("eps must lie in (0, 1/4)")
    if k < 3:
        raise InputError("k must be at least 3")
    out = {
        "circumference": (0.25 - eps) * k * k * math.log(k),
        "consecutive_run": (1 / 64 - eps) * k * k * math.log(k),
    }
    if r is not None:
        if r < 3:
            raise InputError("r must be at least 3")
        out["kr_free_cycle"] = (k / 4) ** (r / (r - 1))
    return out


def main1_parameters(f: BoundProfile, eps: float, m: float) -> dict:
    """beta = alpha + 1, eta = eps / 2, x0 = max(2m, (12 beta / eta)^(beta + 1)), k1 = (8 / eps) f(x0)."""
    if not 0 < eps:
        raise InputError("eps must be positive")
    beta = float(f.alpha) + 1
    eta = eps / 2
    x0 = _safe(lambda: max(2 * m, (12 * beta / eta) ** (beta + 1)))
    k1 = None if x0 is None else _safe(lambda: 8 / eps * float(f(x0)))
    return {"beta": beta, "eta": eta, "x0": x0, "k1": k1}


def main1_predictions(f: BoundProfile, k: float, eps: float, m: float = 3) -> dict:
    """(1 - eps) f(k) for the long cycle and (1 - eps) f(k/4) for the run."""
    params = main1_parameters(f, eps, m)
    quarter = k / 4
    run = (1 - eps) * float(f(quarter)) if quarter >= f.domain_start else None
    return {"cycle": (1 - eps) * float(f(k)), "consecutive_run": run, **params}


def main_threshold_log(eps: float) -> float | None:
    """log k0(eps) = log k1(2 eps, 3, k2(eps / 2)), or None if it overflows."""
    delta = eps / 2
    log_m = order_threshold_log(delta)
    f = triangle_free_order(delta)
    if log_m > 700:
        return None
    params = main1_parameters(f, 2 * eps, math.exp(log_m))
    return None if params["k1"] is None else math.log(params["k1"])


def forbidden_graph_run(k: float, a: float, b: float) -> float:
    """k^(a/(a-1)) (log k)^(b/(a-1)): order of the consecutive-run bound when r(F, K_t) = O(t^a / (log t)^b)."""
    if a <= 1:
        raise InputError("need a > 1")
    return k ** (a / (a - 1)) * math.log(k) ** (b / (a - 1))
