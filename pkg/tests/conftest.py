"""Independent brute-force oracles and hypothesis strategies shared by the tests.

Nothing here calls into the solvers under test; the oracles are deliberately
naive so that agreement is meaningful.
"""

from __future__ import annotations

import sys
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from cyclespec.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n=1, max_n=8, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if density is None:
        picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        picks = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


def brute_chi(g: Graph) -> int:
    """Smallest k with a proper k-coloring, by plain backtracking in vertex order."""
    if g.n == 0:
        return 0
    nbrs = [set(a) for a in g.adj]

    def colorable(k):
        colors = {}

        def go(v):
            if v == g.n:
                return True
            for c in range(min(k, max(colors.values(), default=-1) + 2)):
                if all(colors.get(w) != c for w in nbrs[v]):
                    colors[v] = c
                    if go(v + 1):
                        return True
                    del colors[v]
            return False

        return go(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(not g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def dp_spectrum(g: Graph) -> set[int]:
    """Cycle lengths by Hamiltonian-cycle subset DP: for each vertex set S with
    least vertex s, reach[S][v] says some s-v path covers exactly S."""
    n = g.n
    lengths = set()
    for s in range(n):
        reach = {1 << s: {s}}
        for mask in sorted(range(1 << n), key=lambda m: bin(m).count("1")):
            if not mask >> s & 1 or mask & ((1 << s) - 1) or mask not in reach:
                continue
            size = bin(mask).count("1")
            for v in reach[mask]:
                if size >= 3 and g.has_edge(v, s):
                    lengths.add(size)
                for w in g.adj[v]:
                    if w > s and not mask >> w & 1:
                        reach.setdefault(mask | 1 << w, set()).add(w)
    return lengths


def nx_spectrum(g: Graph) -> set[int]:
    return {len(c) for c in nx.simple_cycles(to_nx(g))}


def brute_min_separator(g: Graph, a, b) -> int:
    """Fewest vertices (anywhere, A and B included) meeting every A-B path."""
    a, b = set(a), set(b)
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            gone = set(s)
            seen = set(a - gone)
            stack = list(seen)
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if w not in gone and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if not seen & b:
                return size
    raise AssertionError("unreachable")


def all_path_lengths(g: Graph) -> dict[tuple[int, int], set[int]]:
    """(u, v) -> edge counts of simple u-v paths, via networkx enumeration."""
    h = to_nx(g)
    out: dict[tuple[int, int], set[int]] = {}
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                out[(u, v)] = {len(p) - 1 for p in nx.all_simple_paths(h, u, v)}
    return out


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.VERDICTS, key=lambda x: int(x.split()[2])):
        terminalreporter.write_line(line)
