"""Exact chromatic number, maximum clique / independent set, critical subgraphs.

All searches work on integer bitmasks and count node expansions against a
``Budget``; running out raises ``BudgetExceeded`` with the bounds known so far.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, InputError, PreconditionError, as_budget
from .graph import Graph, components, delete_edge, induced_subgraph


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# cliques


def _color_sort(cand, masks):
    """Greedy color classes over ``cand``; returns vertices and their class numbers."""
    order, bounds = [], []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~masks[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(n, masks, budget):
    best: list[int] = []
    cur: list[int] = []

    def expand(cand):
        order, bounds = _color_sort(cand, masks)
        for i in range(len(order) - 1, -1, -1):
            if len(cur) + bounds[i] <= len(best):
                return
            v = order[i]
            budget.tick()
            cur.append(v)
            nxt = cand & masks[v]
            if nxt:
                expand(nxt)
            elif len(cur) > len(best):
                best[:] = cur
            cur.pop()
            cand &= ~(1 << v)

    if n:
        expand((1 << n) - 1)
    return sorted(best)


def max_clique(g: Graph, budget=None) -> list[int]:
    """A maximum clique (vertex list, sorted)."""
    return _max_clique(g.n, g.masks, as_budget(budget))


def independence_number(g: Graph, budget=None) -> tuple[int, list[int]]:
    """Exact independence number and a maximum independent set."""
    full = (1 << g.n) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    try:
        best = _max_clique(g.n, comp, as_budget(budget))
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), lower=None, upper=g.n) from None
    return len(best), best


def is_independent(g: Graph, s) -> bool:
    s = list(s)
    return all(not g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1 :])


def has_clique_of_size(g: Graph, r: int, budget=None) -> list[int] | None:
    """A clique on ``r`` vertices if one exists."""
    clique = max_clique(g, budget)
    return clique[:r] if len(clique) >= r else None


# coloring


def greedy_coloring(g: Graph, order=None) -> list[int]:
    colors = [-1] * g.n
    for v in order if order is not None else range(g.n):
        taken = {colors[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def dsatur_coloring(g: Graph) -> list[int]:
    """Heuristic DSATUR coloring (upper bound only)."""
    n = g.n
    colors = [-1] * n
    forb = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (bin(forb[u]).count("1"), g.degree(u), -u))
        c = 0
        while forb[v] >> c & 1:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            forb[w] |= 1 << c
    return colors


def is_proper(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


def _k_color(n, masks, k, budget):
    """A proper coloring with colors < k, or ``None`` when none exists."""
    if n == 0:
        return []
    if k <= 0:
        return None
    full = (1 << n) - 1
    alive = full
    peeled = []
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if bin(masks[v] & alive).count("1") < k:
                alive &= ~(1 << v)
                peeled.append(v)
                changed = True
    colors = [-1] * n
    forb = [0] * n
    verts = list(_bits(alive))
    deg = {v: bin(masks[v] & alive).count("1") for v in verts}
    uncolored = set(verts)

    def search(used):
        if not uncolored:
            return True
        best, key = -1, None
        for u in uncolored:
            kk = (bin(forb[u]).count("1"), deg[u], -u)
            if key is None or kk > key:
                best, key = u, kk
        v = best
        limit = min(k, used + 1)
        avail = ~forb[v] & ((1 << limit) - 1)
        if not avail:
            return False
        uncolored.discard(v)
        nbrs = [w for w in _bits(masks[v] & alive) if colors[w] < 0]
        for c in _bits(avail):
            budget.tick()
            colors[v] = c
            bit = 1 << c
            touched = [w for w in nbrs if not forb[w] & bit]
            for w in touched:
                forb[w] |= bit
            if search(max(used, c + 1)):
                return True
            for w in touched:
                forb[w] &= ~bit
        colors[v] = -1
        uncolored.add(v)
        return False

    if not search(0):
        return None
    for v in reversed(peeled):
        taken = {colors[w] for w in _bits(masks[v]) if colors[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def k_coloring(g: Graph, k: int, budget=None) -> list[int] | None:
    """A proper ``k``-coloring of ``g`` or ``None`` (exhaustive)."""
    return _k_color(g.n, g.masks, k, as_budget(budget))


def chromatic_at_least(g: Graph, k: int, budget=None) -> bool:
    """Decide chi(g) >= k."""
    if k <= 1:
        return k <= 0 or g.n > 0
    return k_coloring(g, k - 1, budget) is None


@dataclass(frozen=True)
class ColoringCertificate:
    k: int
    colors: tuple[int, ...]
    optimal: bool = True
    clique: tuple[int, ...] = ()
    nodes: int = 0

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors), "optimal": self.optimal}


def chromatic_number(g: Graph, budget=None) -> ColoringCertificate:
    """Exact chromatic number with an optimal coloring.

    Lower bound from a maximum clique, upper bound from DSATUR, then
    k-colorability decisions for k = lower, lower + 1, ... .
    """
    budget = as_budget(budget)
    if g.n == 0:
        return ColoringCertificate(0, ())
    upper = dsatur_coloring(g)
    ub = max(upper) + 1
    try:
        clique = _max_clique(g.n, g.masks, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), lower=1, upper=ub) from None
    lb = len(clique)
    for k in range(lb, ub):
        try:
            colors = _k_color(g.n, g.masks, k, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), lower=k, upper=ub) from None
        if colors is not None:
            return ColoringCertificate(k, tuple(colors), True, tuple(clique), budget.used)
    return ColoringCertificate(ub, tuple(upper), True, tuple(clique), budget.used)


def chi(g: Graph, budget=None) -> int:
    return chromatic_number(g, budget).k


# critical subgraphs


@dataclass(frozen=True)
class CriticalWitness:
    subgraph: Graph
    k: int
    deleted_vertices: tuple[int, ...] = field(default=(), compare=False)
    deleted_edges: tuple[tuple[int, int], ...] = field(default=(), compare=False)


def find_k_critical(g: Graph, k: int, budget=None) -> CriticalWitness:
    """Greedy k-critical subgraph: drop vertices, then edges, in ascending order
    while the chromatic number stays >= k.

    The result keeps ``labels`` of ``g``; ``deleted_*`` are reported in
    ``g``'s labels.
    """
    budget = as_budget(budget)
    if k < 1:
        raise InputError("k must be positive")
    if not chromatic_at_least(g, k, budget):
        raise PreconditionError(f"chromatic number is below {k}")
    keep = list(range(g.n))
    dropped = []
    for v in range(g.n):
        trial = [u for u in keep if u != v]
        if chromatic_at_least(induced_subgraph(g, trial), k, budget):
            keep = trial
            dropped.append(g.labels[v])
    h = induced_subgraph(g, keep)
    dropped_edges = []
    for u, v in h.sorted_edges():
        trial = delete_edge(h, u, v)
        if chromatic_at_least(trial, k, budget):
            h = trial
            dropped_edges.append((h.labels[u], h.labels[v]))
    return CriticalWitness(h, k, tuple(dropped), tuple(dropped_edges))


def is_k_critical(g: Graph, k: int, budget=None) -> bool:
    """Check chi = k and that every vertex and edge deletion lowers chi."""
    budget = as_budget(budget)
    if not chromatic_at_least(g, k, budget) or chromatic_at_least(g, k + 1, budget):
        return False
    for v in range(g.n):
        if chromatic_at_least(induced_subgraph(g, [u for u in range(g.n) if u != v]), k, budget):
            return False
    return all(not chromatic_at_least(delete_edge(g, u, v), k, budget) for u, v in g.sorted_edges())


@dataclass(frozen=True)
class CutLemmaReport:
    k: int
    cut: tuple[int, ...]
    component_chi: tuple[tuple[tuple[int, ...], int], ...]
    holds: bool


def verify_cut_lemma(w: CriticalWitness, s, budget=None) -> CutLemmaReport:
    """Every component H of ``w.subgraph - s`` must satisfy chi(H) >= k - |s|."""
    budget = as_budget(budget)
    g = w.subgraph
    cut = sorted(set(s))
    if any(not 0 <= v < g.n for v in cut):
        raise InputError("cut vertex out of range")
    comps = components(g, removed=cut)
    if len(comps) < 2:
        raise InputError(f"{cut} is not a vertex cut")
    results = []
    for comp in comps:
        results.append((tuple(comp), chi(induced_subgraph(g, comp), budget)))
    need = w.k - len(cut)
    return CutLemmaReport(w.k, tuple(cut), tuple(results), all(c >= need for _, c in results))
