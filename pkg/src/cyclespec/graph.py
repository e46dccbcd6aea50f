"""Immutable simple graphs and the polynomial-time queries built on them.

Vertices are the integers ``0..n-1``. Every graph also carries ``labels``,
the vertex names in the graph it was derived from, so witnesses found in an
induced subgraph can be reported against the original input.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

MAX_VERTICES = 5000

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    name: str = field(default="", compare=False)
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise InputError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {(u, v)} not normalized or out of range for n={self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise InputError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "", strict: bool = False) -> "Graph":
        """Build a graph, normalizing edge orientation.

        With ``strict`` a repeated edge is an error instead of being merged.
        """
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {(u, v)} out of range for n={n}")
            key = _norm(u, v)
            if strict and key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen), name)

    # derived views, cached on first use

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(x) for x in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for nb in self.adj:
            m = 0
            for w in nb:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def to_original(self, vertices: Iterable[int]) -> list[int]:
        return [self.labels[v] for v in vertices]

    def index_of(self, label: int) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"label {label} is not a vertex of this graph") from None

    @cached_property
    def _label_index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def relabeled(self, labels: Sequence[int]) -> "Graph":
        return Graph(self.n, self.edges, self.name, tuple(labels))

    def renamed(self, name: str) -> "Graph":
        return Graph(self.n, self.edges, name, self.labels)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"


def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    out = sorted(set(vs))
    for v in out:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range for n={g.n}")
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertex i of the result is the i-th smallest of ``s``.

    ``labels`` of the result compose with ``g.labels``.
    """
    keep = _check_vertices(g, s)
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(len(keep), edges, g.name, tuple(g.labels[v] for v in keep))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    drop = set(_check_vertices(g, s))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm(u, v)
    if e not in g.edges:
        raise InputError(f"{e} is not an edge")
    return Graph(g.n, g.edges - {e}, g.name, g.labels)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertices(g, (u, v))
    if u == v:
        raise InputError("self-loop")
    return Graph(g.n, g.edges | {_norm(u, v)}, g.name, g.labels)


def complement(g: Graph) -> Graph:
    edges = frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges)
    return Graph(g.n, edges, g.name, g.labels)


# traversal


def bfs_distances(g: Graph, root: int, allowed: set[int] | None = None) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g - removed``, each sorted, ordered by least vertex."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def shortest_path(g: Graph, u: int, v: int, allowed: set[int] | None = None) -> list[int] | None:
    """Shortest u-v path (ties: smallest-index parents) inside ``allowed`` (plus u, v)."""
    if u == v:
        return [u]
    ok = None if allowed is None else set(allowed) | {u, v}
    parent = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if w in parent or (ok is not None and w not in ok):
                continue
            parent[w] = x
            if w == v:
                path = [v]
                while path[-1] != u:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


@dataclass(frozen=True)
class BfsLayering:
    root: int
    layers: tuple[frozenset[int], ...]
    parent: dict[int, int]

    @cached_property
    def depth(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def lca(self, vertices: Iterable[int]) -> int:
        """Lowest common ancestor of vertices all lying in one layer."""
        current = set(vertices)
        depths = {self.depth[v] for v in current}
        if len(depths) != 1:
            raise InputError("lca() expects vertices from a single layer")
        while len(current) > 1:
            current = {self.parent[v] for v in current}
        return current.pop()

    def tree_path(self, u: int, v: int) -> list[int]:
        """Path u -> lca(u, v) -> v in the tree (u, v in the same layer)."""
        up, down = self.path_to_root(u), self.path_to_root(v)
        on_up = {x: i for i, x in enumerate(up)}
        for j, x in enumerate(down):
            if x in on_up:
                return up[: on_up[x] + 1] + down[:j][::-1]
        raise InputError("vertices lie in different trees")


def bfs_layering(g: Graph, root: int) -> BfsLayering:
    """Breadth-first layers from ``root``; parents are the smallest-index discoverer."""
    if not 0 <= root < g.n:
        raise InputError(f"root {root} out of range")
    parent = {root: root}
    layers = [[root]]
    while True:
        nxt = []
        for u in layers[-1]:
            for w in g.adj[u]:
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        if not nxt:
            break
        layers.append(sorted(nxt))
    return BfsLayering(root, tuple(frozenset(x) for x in layers), parent)


# small-structure queries


def is_triangle_free(g: Graph) -> bool:
    masks = g.masks
    return all(masks[u] & masks[v] == 0 for u, v in g.edges)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = float("inf")
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite_with(g: Graph, a: Iterable[int]) -> bool:
    """True when every edge has exactly one end in ``a``."""
    side = set(a)
    return all((u in side) != (v in side) for u, v in g.edges)


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-coloring, or ``None`` when ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """``cycle`` lists >= 3 distinct vertices, consecutive (and last-first) adjacent."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    if any(not (0 <= v < g.n) for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def is_path(g: Graph, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    if any(not (0 <= v < g.n) for v in path):
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def two_core(g: Graph) -> set[int]:
    """Vertices surviving repeated deletion of vertices of degree < 2."""
    deg = [len(a) for a in g.adj]
    alive = set(range(g.n))
    stack = [v for v in range(g.n) if deg[v] < 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


# connectivity


def articulation_points(g: Graph, removed: Iterable[int] = ()) -> list[int]:
    """Cut vertices of ``g - removed`` (iterative Hopcroft-Tarjan), sorted."""
    gone = set(removed)
    disc = {}
    low = {}
    points = set()
    timer = 0
    for s in range(g.n):
        if s in gone or s in disc:
            continue
        disc[s] = low[s] = timer
        timer += 1
        root_children = 0
        stack = [(s, -1, iter(g.adj[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in gone:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if parent == s:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    points.add(parent)
        if root_children > 1:
            points.add(s)
    return sorted(points)


def connectivity_at_least(g: Graph, c: int) -> tuple[bool, frozenset[int] | None]:
    """Whether ``g`` is ``c``-connected (c in 1..3); otherwise a lexicographically least small cut.

    A disconnected graph yields the empty cut.
    """
    if c not in (1, 2, 3):
        raise InputError("c must be 1, 2 or 3")
    if g.n < c + 1:
        raise InputError(f"need at least {c + 1} vertices to test {c}-connectivity")
    if not is_connected(g):
        return False, frozenset()
    if c == 1:
        return True, None
    cut = articulation_points(g)
    if cut:
        return False, frozenset(cut[:1])
    if c == 2:
        return True, None
    for v in range(g.n):
        later = [u for u in articulation_points(g, removed=(v,)) if u > v]
        if later:
            return False, frozenset((v, later[0]))
    return True, None


def vertex_cuts(g: Graph, size: int) -> list[frozenset[int]]:
    """All separating sets of exactly ``size`` vertices, in lexicographic order."""
    out = []
    for s in combinations(range(g.n), size):
        if len(components(g, removed=s)) > 1:
            out.append(frozenset(s))
    return out


# Menger via unit vertex-capacity max-flow


@dataclass(frozen=True)
class PathFamily:
    """Vertex-disjoint paths, each running from ``endpoints_a`` to ``endpoints_b``."""

    paths: tuple[tuple[int, ...], ...]
    endpoints_a: frozenset[int]
    endpoints_b: frozenset[int]
    cut: frozenset[int] = frozenset()

    def __len__(self):
        return len(self.paths)

    def validate(self, g: Graph | None = None) -> None:
        used = set()
        for p in self.paths:
            if not p or len(set(p)) != len(p):
                raise InputError(f"path {p} is not simple")
            if g is not None and not is_path(g, p):
                raise InputError(f"path {p} is not a path of the graph")
            if p[0] not in self.endpoints_a or p[-1] not in self.endpoints_b:
                raise InputError(f"path {p} must run from A to B")
            inner = p[1:-1]
            if any(x in self.endpoints_a or x in self.endpoints_b for x in inner):
                raise InputError(f"path {p} has an internal vertex in A or B")
            if used.intersection(p):
                raise InputError("paths are not vertex-disjoint")
            used.update(p)


def menger_disjoint_paths(g: Graph, a: Iterable[int], b: Iterable[int]) -> PathFamily:
    """Maximum family of vertex-disjoint A-B paths together with a minimum A-B separator."""
    A = set(_check_vertices(g, a))
    B = set(_check_vertices(g, b))
    if not A or not B:
        raise InputError("A and B must be nonempty")
    if A & B:
        raise InputError("A and B must be disjoint")
    n = g.n
    big = n + 1
    source, sink = 2 * n, 2 * n + 1
    # arc lists: node -> {node: residual capacity}
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n + 2)]

    def arc(x, y, c):
        cap[x][y] = cap[x].get(y, 0) + c
        cap[y].setdefault(x, 0)

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
    for u, v in g.sorted_edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    for v in sorted(A):
        arc(source, 2 * v, big)
    for v in sorted(B):
        arc(2 * v + 1, sink, big)
    original = [dict(c) for c in cap]

    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y in sorted(cap[x]):
                if cap[x][y] > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            break
        y = sink
        while y != source:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1

    reach = set(prev)
    cut = frozenset(v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach)

    used = [{y: original[x].get(y, 0) - cap[x][y] for y in cap[x] if original[x].get(y, 0) - cap[x][y] > 0} for x in range(2 * n + 2)]
    paths = []
    for start in sorted(A):
        if used[source].get(2 * start, 0) <= 0:
            continue
        used[source][2 * start] -= 1
        walk = [start]
        node = 2 * start + 1
        while True:
            nxt = min(y for y, f in used[node].items() if f > 0)
            used[node][nxt] -= 1
            if nxt == sink:
                break
            v = nxt // 2
            walk.append(v)
            node = 2 * v + 1
        # keep the segment from the last A vertex to the first B vertex after it
        i = max(j for j, x in enumerate(walk) if x in A)
        j = next(j for j in range(i, len(walk)) if walk[j] in B)
        paths.append(tuple(walk[i : j + 1]))
    if len(paths) != flow or len(cut) != flow:
        raise AssertionError("flow decomposition mismatch")
    return PathFamily(tuple(sorted(paths)), frozenset(A), frozenset(B), cut)


# file formats


def read_dimacs(text: str, name: str = "") -> Graph:
    """Parse ``p edge n m`` / ``e u v`` (1-indexed) text; duplicates and loops are rejected."""
    n = None
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or n is not None:
                raise InputError(f"line {lineno}: bad problem line")
            n, declared = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) < 3:
                raise InputError(f"line {lineno}: bad edge line")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise InputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise InputError("missing problem line")
    if declared != len(edges):
        raise InputError(f"header declares {declared} edges, found {len(edges)}")
    return Graph.from_edges(n, edges, name=name, strict=True)


def write_dimacs(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"c {g.name}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_from_json(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InputError('graph JSON needs "n" and "edges"')
    return Graph.from_edges(int(obj["n"]), obj["edges"], name=obj.get("name", ""), strict=True)


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.name:
        out["name"] = g.name
    return out


def read_graph_text(text: str, name: str = "") -> Graph:
    """Sniff the format: JSON object or DIMACS."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        g = graph_from_json(obj)
        return g if g.name or not name else g.renamed(name)
    return read_dimacs(text, name=name)
