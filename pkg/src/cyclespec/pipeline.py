"""Constructive reductions: nearly 3-connected subgraphs, A-B paths of every
length in a chorded cycle, cycles of consecutive lengths from BFS layers,
cycle splicing along disjoint paths, and the case analysis for long cycles.

Witnesses (cycles, paths, cuts) are reported in the labels of the input graph.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .bounds import BoundProfile, g_transform, linear
from .coloring import chi, chromatic_at_least, find_k_critical
from .errors import BudgetExceeded, InputError, PipelineError, PreconditionError, as_budget
from .graph import (
    Graph,
    add_edge,
    bfs_layering,
    components,
    connectivity_at_least,
    delete_edge,
    induced_subgraph,
    is_bipartite_with,
    is_cycle,
    is_path,
    menger_disjoint_paths,
    shortest_path,
    vertex_cuts,
)
from .cycles import circumference, longest_cycle, paths_longest_first


def _to_local(g: Graph, labels):
    return [g.index_of(x) for x in labels]


# nearly 3-connected reduction


@dataclass
class Nearly3Connected:
    gstar: Graph
    estar: tuple[int, int]  # labels
    critical: Graph
    already_3_connected: bool
    cut: tuple[int, ...] = ()
    component: tuple[int, ...] = ()
    bypass: tuple[int, ...] = ()
    chi_gstar_minus_e_at_least: int = 0
    three_connected: bool = False
    circumference_gstar: int = 0
    circumference_g: int = 0

    @property
    def estar_local(self) -> tuple[int, int]:
        return tuple(_to_local(self.gstar, self.estar))


def nearly_3_connected(g: Graph, k: int, budget=None, check: bool = True) -> Nearly3Connected:
    """A 3-connected G* and edge e* with G* - e* inside g and chi(G* - e*) >= k - 1.

    Starts from a k-critical subgraph G'. If G' is not 3-connected, takes the
    2-cut S = {u, v} and component F of G' - S with |F| minimum (ties broken by
    the sorted vertex lists of F, then S) and returns G'[F + S] + uv. With
    ``check`` the three guarantees are verified with exact solvers.
    """
    budget = as_budget(budget)
    if k < 4:
        raise PreconditionError("nearly_3_connected needs k >= 4")
    try:
        crit = find_k_critical(g, k, budget).subgraph
    except PreconditionError:
        raise PreconditionError(f"chromatic number of the input is below {k}") from None
    ok, _ = connectivity_at_least(crit, 3)
    if ok:
        e = min(crit.edges)
        out = Nearly3Connected(crit, tuple(crit.to_original(e)), crit, True)
    else:
        best = None
        for s in vertex_cuts(crit, 2):
            for comp in components(crit, removed=s):
                key = (len(comp), tuple(comp), tuple(sorted(s)))
                if best is None or key < best:
                    best = key
        if best is None:
            raise PipelineError("nearly3", "critical subgraph is not 2-connected")
        _, comp, (u, v) = best
        inner = induced_subgraph(crit, list(comp) + [u, v])
        lu, lv = crit.labels[u], crit.labels[v]
        gstar = add_edge(inner, inner.index_of(lu), inner.index_of(lv))
        bypass: tuple[int, ...] = ()
        if not crit.has_edge(u, v):
            outside = set(range(crit.n)) - set(comp)
            p = shortest_path(crit, u, v, allowed=outside)
            if p is None:
                raise PipelineError("nearly3", "no u-v path avoiding F")
            bypass = tuple(crit.to_original(p))
        out = Nearly3Connected(
            gstar, (lu, lv), crit, False, (lu, lv), tuple(crit.to_original(comp)), bypass
        )
    if check:
        _check_nearly3(g, k, out, budget)
    return out


def _check_nearly3(g: Graph, k: int, out: Nearly3Connected, budget) -> None:
    gs = out.gstar
    eu, ev = out.estar_local
    rest = delete_edge(gs, eu, ev)
    for u, v in rest.edges:
        if not g.has_edge(g.index_of(rest.labels[u]), g.index_of(rest.labels[v])):
            raise PipelineError("nearly3", "G* - e* is not a subgraph of the input")
    if not chromatic_at_least(rest, k - 1, budget):
        raise PipelineError("nearly3", f"chi(G* - e*) < {k - 1}")
    out.chi_gstar_minus_e_at_least = k - 1
    out.three_connected, _ = connectivity_at_least(gs, 3)
    if not out.three_connected:
        raise PipelineError("nearly3", "G* is not 3-connected")
    out.circumference_gstar = circumference(gs, budget)
    out.circumference_g = circumference(g, budget)
    if out.circumference_gstar > out.circumference_g:
        raise PipelineError("nearly3", "c(G*) > c(G)")


# A-B paths in a chorded cycle


@dataclass
class ChordedPaths:
    """``paths[i]`` runs from A to B with i edges."""

    paths: dict[int, list[int]]
    bipartite_exception: bool

    @property
    def lengths(self) -> list[int]:
        return sorted(self.paths)


def _arc(cycle, i, j, step):
    n = len(cycle)
    out = [cycle[i]]
    while i != j:
        i = (i + step) % n
        out.append(cycle[i])
    return out


def _candidate_paths(cycle, chords):
    """Every simple path in cycle + one chord, grouped by edge count: subpaths of
    the cycle first, then paths through each chord."""
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    by_len: dict[int, list[list[int]]] = {}
    for length in range(1, n):
        for j in range(n):
            by_len.setdefault(length, []).append([cycle[(j + t) % n] for t in range(length + 1)])
    for x, y in chords:
        for a, b in ((x, y), (y, x)):
            pa, pb = pos[a], pos[b]
            for d1 in (1, -1):
                for p in range(n):
                    left = [cycle[(pa + d1 * t) % n] for t in range(p + 1)][::-1]
                    if len(set(left)) != len(left) or b in left:
                        break
                    taken = set(left)
                    for d2 in (1, -1):
                        right = []
                        for q in range(n):
                            w = cycle[(pb + d2 * q) % n]
                            if w in taken or w in right:
                                break
                            right.append(w)
                            by_len.setdefault(p + q + 1, []).append(left + right)
    return by_len


def paths_all_lengths(h: Graph, cycle, a, b, chord=None) -> ChordedPaths:
    """A-B paths with 1, 2, ..., |h| - 1 edges in a Hamiltonian cycle plus chord(s).

    ``cycle`` is a Hamiltonian cycle of ``h`` (local vertex ids); every other
    edge of ``h`` is a chord and at least one is required. ``chord`` puts one
    chord first in the search order. When ``h`` is bipartite with sides (A, B)
    even lengths cannot occur and ``bipartite_exception`` is set.
    """
    cycle = list(cycle)
    n = h.n
    if len(cycle) != n or sorted(cycle) != list(range(n)) or not is_cycle(h, cycle):
        raise InputError("cycle must be a Hamiltonian cycle of h")
    cycle_edges = {tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)}
    chords = sorted(e for e in h.edges if e not in cycle_edges)
    if not chords:
        raise InputError("h needs at least one chord")
    if chord is not None:
        chord = tuple(sorted(chord))
        if chord not in chords:
            raise InputError(f"{chord} is not a chord of the cycle")
        chords.remove(chord)
        chords.insert(0, chord)
    A, B = set(a), set(b)
    if not A or not B or A & B or A | B != set(range(n)):
        raise InputError("(A, B) must be a nontrivial partition of V(h)")
    found: dict[int, list[int]] = {}
    for length, cands in _candidate_paths(cycle, chords).items():
        for p in cands:
            if p[0] in A and p[-1] in B:
                found[length] = p
                break
            if p[-1] in A and p[0] in B:
                found[length] = p[::-1]
                break
    exception = is_bipartite_with(h, A)
    missing = [i for i in range(1, n) if i not in found]
    if missing and not exception:
        raise PipelineError("chorded-paths", f"no A-B path of lengths {missing}")
    return ChordedPaths(dict(sorted(found.items())), exception)


# consecutive cycle lengths from BFS layers


@dataclass
class Stage:
    name: str
    graph: Graph
    chi: int
    chi_exact: bool

    def to_json(self) -> dict:
        g = self.graph
        return {
            "name": self.name,
            "vertices": list(g.labels),
            "edges": sorted([sorted((g.labels[u], g.labels[v])) for u, v in g.edges]),
            "chi": self.chi,
            "chi_exact": self.chi_exact,
        }


@dataclass
class PipelineTrace:
    k: int
    stages: list[Stage]
    layer_index: int
    sublayer_index: int
    tree_t: dict[int, int]
    tree_u: dict[int, int]
    tree_t_prime: dict[int, int]
    longest_path: list[int]
    trimmed_path: list[int]
    closing_path: list[int]
    chorded_cycle: list[int]
    chord: tuple[int, int]
    part_a: list[int]
    part_b: list[int]
    r: int
    cycles: list[list[int]]
    retries: int = 0

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "stages": [s.to_json() for s in self.stages],
            "layer_index": self.layer_index,
            "sublayer_index": self.sublayer_index,
            "trees": {
                "T": {str(v): p for v, p in sorted(self.tree_t.items())},
                "U": {str(v): p for v, p in sorted(self.tree_u.items())},
                "T_prime": {str(v): p for v, p in sorted(self.tree_t_prime.items())},
            },
            "longest_path": self.longest_path,
            "trimmed_path": self.trimmed_path,
            "closing_path": self.closing_path,
            "chorded_cycle": self.chorded_cycle,
            "chord": list(self.chord),
            "A": self.part_a,
            "B": self.part_b,
            "r": self.r,
            "cycles": self.cycles,
            "lengths": self.lengths,
            "retries": self.retries,
        }


def _stage(name, g, threshold, budget):
    try:
        return Stage(name, g, chi(g, budget), True)
    except BudgetExceeded:
        return Stage(name, g, threshold, False)


def _chord_of(g: Graph, path):
    """First chord (by position pair) of a path of ``g``, or None."""
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if g.has_edge(path[i], path[j]):
                return path[i], path[j]
    return None


def _trim(g: Graph, path):
    """Odd-length subpath with a chord, deleting at most one end; the
    higher-labelled end goes when both would do."""
    if (len(path) - 1) % 2 == 1 and _chord_of(g, path):
        return path
    options = []
    for cand, dropped in ((path[1:], path[0]), (path[:-1], path[-1])):
        if len(cand) >= 2 and (len(cand) - 1) % 2 == 1 and _chord_of(g, cand):
            options.append((g.labels[dropped], cand))
    if not options:
        return None
    return max(options)[1]


def consecutive_cycles_pipeline(g: Graph, k: int, budget=None, max_retries: int = 50) -> PipelineTrace:
    """Cycles of lengths 2r+1, ..., 2r+|C|-1 from a graph with chi >= 4k.

    BFS layers of a component F with chi >= 4k give a layer with chi >= 2k;
    BFS layers inside a component of that layer give a layer J with chi >= k.
    A longest path of a k-critical J' is trimmed to an odd chorded path and
    closed through the second BFS tree into an odd chorded cycle C. The
    branches of the minimal subtree of the first tree spanning V(C) split C
    into (A, B); every A-B path of C + chord closes into a cycle through that
    subtree.
    """
    budget = as_budget(budget)
    if k < 4:
        raise PreconditionError("the pipeline needs k >= 4")
    if not chromatic_at_least(g, 4 * k, budget):
        raise PreconditionError(f"chromatic number of the input is below {4 * k}")

    F = None
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        if chromatic_at_least(sub, 4 * k, budget):
            F = sub
            break
    if F is None:
        raise PipelineError("component", f"no component with chi >= {4 * k}")
    T = bfs_layering(F, 0)
    layer = next(
        (i for i, L in enumerate(T.layers) if chromatic_at_least(induced_subgraph(F, L), 2 * k, budget)), None
    )
    if layer is None:
        raise PipelineError("layer", f"no BFS layer with chi >= {2 * k}")
    H = induced_subgraph(F, T.layers[layer])
    Hc = None
    for comp in components(H):
        sub = induced_subgraph(H, comp)
        if chromatic_at_least(sub, 2 * k, budget):
            Hc = sub
            break
    if Hc is None:
        raise PipelineError("layer-component", f"no component of the layer with chi >= {2 * k}")
    U = bfs_layering(Hc, 0)
    sub_layer = next(
        (i for i, M in enumerate(U.layers) if chromatic_at_least(induced_subgraph(Hc, M), k, budget)), None
    )
    if sub_layer is None:
        raise PipelineError("sublayer", f"no layer of U with chi >= {k}")
    J = induced_subgraph(Hc, U.layers[sub_layer])
    Jc = find_k_critical(J, k, budget).subgraph
    if Jc.min_degree() < k - 1:
        raise PipelineError("critical", "critical subgraph has a vertex of degree < k - 1")

    retries = 0
    for P in paths_longest_first(Jc, budget):
        Pp = _trim(Jc, P)
        if Pp is not None:
            x, y = Hc.index_of(Jc.labels[Pp[0]]), Hc.index_of(Jc.labels[Pp[-1]])
            closing = U.tree_path(y, x)  # y ... x in Hc ids
            closing_labels = Hc.to_original(closing)
            Pp_labels = Jc.to_original(Pp)
            if (len(closing) - 1) % 2 == 0 and not set(closing_labels[1:-1]) & set(Pp_labels):
                break
        retries += 1
        if retries > max_retries:
            raise PipelineError("closing-path", "no longest path admits an odd chorded trimming")
    else:
        raise PipelineError("longest-path", "critical subgraph has no path")

    C = Pp_labels + closing_labels[1:-1]
    chord_local = _chord_of(Jc, Pp)
    chord = (Jc.labels[chord_local[0]], Jc.labels[chord_local[1]])
    if len(C) % 2 == 0:
        raise PipelineError("chorded-cycle", "closed cycle has even length")
    if not is_cycle(g, _to_local(g, C)):
        raise PipelineError("chorded-cycle", "C is not a cycle of the input")

    # minimal subtree T' of T with leaf set V(C)
    C_F = _to_local(F, C)
    top = T.lca(C_F)
    r = T.depth[C_F[0]] - T.depth[top]
    branch = {}
    t_prime = {}
    for v in C_F:
        up = T.path_to_root(v)[: r + 1]
        branch[v] = up[r - 1]
        for child, parent in zip(up, up[1:]):
            t_prime[F.labels[child]] = F.labels[parent]
    first = min(C_F, key=lambda v: F.labels[v])
    A = sorted(F.labels[v] for v in C_F if branch[v] == branch[first])
    B = sorted(F.labels[v] for v in C_F if branch[v] != branch[first])
    if not B:
        raise PipelineError("subtree", "T' does not branch at its root")

    Hp = induced_subgraph(g, _to_local(g, C))
    cyc_local = _to_local(Hp, C)
    chorded = paths_all_lengths(Hp, cyc_local, _to_local(Hp, A), _to_local(Hp, B), chord=_to_local(Hp, chord))
    if chorded.bipartite_exception or len(chorded.paths) != len(C) - 1:
        raise PipelineError("chorded-paths", "odd chorded cycle lacks some A-B path length")
    cycles = []
    for i, p in chorded.paths.items():
        pl = Hp.to_original(p)
        a_end, b_end = F.index_of(pl[0]), F.index_of(pl[-1])
        q = F.to_original(T.tree_path(b_end, a_end))
        cyc = pl + q[1:-1]
        if len(cyc) != 2 * r + i or not is_cycle(g, _to_local(g, cyc)):
            raise PipelineError("splice", f"P_{i} + Q_{i} is not a cycle of length {2 * r + i}")
        cycles.append(cyc)

    stages = [
        _stage("F", F, 4 * k, budget),
        _stage("H", Hc, 2 * k, budget),
        _stage("J", J, k, budget),
        _stage("J'", Jc, k, budget),
    ]
    return PipelineTrace(
        k=k,
        stages=stages,
        layer_index=layer,
        sublayer_index=sub_layer,
        tree_t={F.labels[v]: F.labels[p] for v, p in T.parent.items()},
        tree_u={Hc.labels[v]: Hc.labels[p] for v, p in U.parent.items()},
        tree_t_prime=t_prime,
        longest_path=Jc.to_original(P),
        trimmed_path=Pp_labels,
        closing_path=closing_labels,
        chorded_cycle=C,
        chord=chord,
        part_a=A,
        part_b=B,
        r=r,
        cycles=cycles,
        retries=retries,
    )


# splicing two cycles along disjoint paths


def _orient_paths(c, cprime, paths):
    cs, cps = set(c), set(cprime)
    if len(cs) != len(c) or len(cps) != len(cprime) or len(c) < 3 or len(cprime) < 3:
        raise InputError("cycles must list at least 3 distinct vertices")
    if cs & cps:
        raise InputError("the two cycles share a vertex")
    out = []
    used = set()
    for p in paths:
        p = list(p)
        if len(p) < 2:
            raise InputError("attachment paths need at least one edge")
        if p[0] in cps and p[-1] in cs:
            p = p[::-1]
        if p[0] not in cs or p[-1] not in cps:
            raise InputError(f"path {p} does not join the two cycles")
        if len(set(p)) != len(p) or any(v in cs or v in cps for v in p[1:-1]):
            raise InputError(f"path {p} is not simple or meets a cycle internally")
        if used & set(p):
            raise InputError("paths are not vertex-disjoint")
        used |= set(p)
        out.append(p)
    return out


def splice_two_bound(len_c: int, len_cp: int, ell: int) -> Fraction:
    """(l - 1)/l |C| + |C'| / 2."""
    return Fraction(ell - 1, ell) * len_c + Fraction(len_cp, 2)


def splice_three_bound(len_c: int, len_cp: int) -> Fraction:
    return Fraction(2, 3) * (len_c + len_cp)


def _cyclic_distance(n, i, j):
    d = (j - i) % n
    return min(d, n - d)


def _long_arc(cycle, pos, a, b):
    """Vertices from a to b along the longer of the two arcs (forward on ties)."""
    n = len(cycle)
    i, j = pos[a], pos[b]
    fwd = (j - i) % n
    return _arc(cycle, i, j, 1 if fwd >= n - fwd else -1)


def _arc_through(cycle, pos, a, b, via):
    n = len(cycle)
    i, j, t = pos[a], pos[b], pos[via]
    return _arc(cycle, i, j, 1 if (t - i) % n < (j - i) % n else -1)


def splice_two_paths(c, cprime, family) -> list[int]:
    """Cycle of length >= (l-1)/l |C| + |C'|/2 through two of l disjoint C-C' paths.

    Uses the pair whose ends on C are cyclically closest, the long arc of C
    between them and the longer arc of C' between their other ends.
    """
    paths = _orient_paths(c, cprime, family.paths if hasattr(family, "paths") else family)
    ell = len(paths)
    if ell < 2:
        raise InputError("need at least two paths")
    c, cprime = list(c), list(cprime)
    pos = {v: i for i, v in enumerate(c)}
    posp = {v: i for i, v in enumerate(cprime)}
    best = None
    for i in range(ell):
        for j in range(i + 1, ell):
            d = _cyclic_distance(len(c), pos[paths[i][0]], pos[paths[j][0]])
            if best is None or d < best[0]:
                best = (d, i, j)
    _, i, j = best
    pi, pj = paths[i], paths[j]
    arc_c = _long_arc(c, pos, pi[0], pj[0])
    arc_cp = _long_arc(cprime, posp, pj[-1], pi[-1])
    cyc = arc_c + pj[1:] + arc_cp[1:] + pi[::-1][1:-1]
    if len(set(cyc)) != len(cyc):
        raise PipelineError("splice", "spliced cycle repeats a vertex")
    if len(cyc) < splice_two_bound(len(c), len(cprime), ell):
        raise PipelineError("splice", "inequality (l-1)/l |C| + |C'|/2 violated")
    return cyc


def double_cover_cycles(c, cprime, p1, p2, p3) -> list[list[int]]:
    """Three cycles covering each edge of C, C' and the three paths exactly twice.

    For each pair (i, j) of paths, with m the third one, the cycle runs along
    P_i and P_j, the arc of C through the end of P_m, and the arc of C'
    through the other end of P_m.
    """
    paths = _orient_paths(c, cprime, [p1, p2, p3])
    c, cprime = list(c), list(cprime)
    pos = {v: i for i, v in enumerate(c)}
    posp = {v: i for i, v in enumerate(cprime)}
    out = []
    for i, j, m in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        pi, pj, pm = paths[i], paths[j], paths[m]
        arc_c = _arc_through(c, pos, pi[0], pj[0], pm[0])
        arc_cp = _arc_through(cprime, posp, pj[-1], pi[-1], pm[-1])
        out.append(arc_c + pj[1:] + arc_cp[1:] + pi[::-1][1:-1])
    return out


def splice_three_paths(c, cprime, p1, p2, p3) -> list[int]:
    """Longest of the three double-cover cycles; length >= 2/3 (|C| + |C'|)."""
    cycles = double_cover_cycles(c, cprime, p1, p2, p3)
    best = max(cycles, key=len)
    if len(set(best)) != len(best):
        raise PipelineError("splice", "double-cover cycle repeats a vertex")
    if len(best) < splice_three_bound(len(c), len(cprime)):
        raise PipelineError("splice", "inequality 2/3 (|C| + |C'|) violated")
    return best


# long cycles through the case analysis


@dataclass
class LongCycleResult:
    cycle: list[int]
    case: str
    k: int
    claim_bound: float
    claim_holds: bool
    chi1: int | None = None
    chi2: int | None = None
    len_c: int | None = None
    len_cprime: int | None = None
    ell: int | None = None
    case1_threshold: str | None = None
    case2_threshold: str | None = None
    c: list[int] = field(default_factory=list)
    cprime: list[int] = field(default_factory=list)
    paths: list[list[int]] = field(default_factory=list)
    lifted: bool = False
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def _lift(g: Graph, cycle, estar, bypass):
    """Replace the added edge e* by the bypass path when e* is not an edge of g."""
    u, v = estar
    n = len(cycle)
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        if {a, b} == {u, v} and not g.has_edge(g.index_of(a), g.index_of(b)):
            path = list(bypass) if a == bypass[0] else list(bypass)[::-1]
            return list(cycle[: i + 1]) + path[1:-1] + list(cycle[i + 1 :]), True
    return list(cycle), False


def extract_long_cycle(
    g: Graph,
    k: int,
    f: BoundProfile | None = None,
    x0=8,
    eta=Fraction(1, 4),
    budget=None,
) -> LongCycleResult:
    """A long cycle in a graph with chi >= k following the inductive case split.

    For k <= x0 a longest cycle of a k-critical subgraph (length >= k). Above
    x0: reduce to a nearly 3-connected G*, take a longest cycle C of G* - e*
    and a longest cycle C' of G* - V(C) - e*; Case 1 returns C, Case 2 splices
    along three disjoint C-C' paths, Case 3 along two. Case thresholds are
    exact rationals with beta = alpha + 1.
    """
    budget = as_budget(budget)
    f = linear() if f is None else f
    if k < 3:
        raise PreconditionError("k must be at least 3")
    if x0 < 1:
        raise InputError("x0 must be >= 1")
    eta = Fraction(eta)
    if not 0 < eta < 1:
        raise InputError("eta must lie in (0, 1)")
    if not chromatic_at_least(g, k, budget):
        raise PreconditionError(f"chromatic number of the input is below {k}")
    gfun = g_transform(f, x0)
    raw = gfun(Fraction(k) if isinstance(x0, int) else k)
    claim = (1 - eta) * raw if isinstance(raw, Fraction) else float(1 - eta) * float(raw)

    def finish(cycle, case, **kw):
        if not is_cycle(g, _to_local(g, cycle)):
            raise PipelineError("extract", f"{case}: result is not a cycle of the input")
        holds = len(cycle) >= claim if isinstance(claim, Fraction) else len(cycle) >= float(claim) - 1e-9
        return LongCycleResult(cycle, case, k, float(claim), holds, **kw)

    if k <= x0:
        crit = find_k_critical(g, k, budget).subgraph
        cyc = longest_cycle(crit, budget)
        if cyc is None or len(cyc) < k:
            raise PipelineError("base", "k-critical subgraph has no cycle of length >= k")
        return finish(crit.to_original(cyc), "base")

    n3 = nearly_3_connected(g, k, budget, check=False)
    gs = n3.gstar
    eu, ev = n3.estar_local
    h0 = delete_edge(gs, eu, ev)
    C = longest_cycle(h0, budget)
    if C is None:
        raise PipelineError("extract", "G* - e* has no cycle")
    chi1 = chi(induced_subgraph(gs, C), budget)
    rest = [v for v in range(gs.n) if v not in set(C)]
    g2 = induced_subgraph(gs, rest)
    if eu in rest and ev in rest:
        g2 = delete_edge(g2, g2.index_of(gs.labels[eu]), g2.index_of(gs.labels[ev]))
    chi2 = chi(g2, budget) if g2.n else 0
    cp_local = longest_cycle(g2, budget) if g2.n else None
    Cp = None if cp_local is None else [gs.index_of(x) for x in g2.to_original(cp_local)]

    beta = Fraction(f.alpha) + 1
    t1 = (1 - eta / beta) * k
    t2 = (1 - Fraction(1, 4) / beta) * k
    info = dict(
        chi1=chi1,
        chi2=chi2,
        len_c=len(C),
        len_cprime=0 if Cp is None else len(Cp),
        case1_threshold=str(t1),
        case2_threshold=str(t2),
        c=gs.to_original(C),
        cprime=[] if Cp is None else gs.to_original(Cp),
    )
    if chi1 >= t1:
        return finish(gs.to_original(C), "case1", **info)
    if Cp is None:
        return finish(gs.to_original(C), "degenerate", notes=["G* - V(C) - e* is acyclic; returning C"], **info)
    fam = menger_disjoint_paths(gs, C, Cp)
    info["ell"] = len(fam)
    info["paths"] = [gs.to_original(p) for p in fam.paths]
    notes = []
    if chi2 >= t2 and len(fam) >= 3:
        spliced, case = splice_three_paths(C, Cp, *fam.paths[:3]), "case2"
    elif len(fam) >= 2:
        if chi2 >= t2:
            notes.append("fewer than three disjoint paths; used the two-path splice")
        spliced, case = splice_two_paths(C, Cp, fam), "case3"
    else:
        return finish(gs.to_original(C), "degenerate", notes=["fewer than two disjoint paths"], **info)
    cycle, lifted = _lift(g, gs.to_original(spliced), n3.estar, n3.bypass)
    return finish(cycle, case, lifted=lifted, notes=notes, **info)
