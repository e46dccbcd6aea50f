"""Graph families used as test corpora, and the textual/JSON generator specs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .graph import Graph

FAMILIES = (
    "mycielski",
    "kneser",
    "shift",
    "triangle_free_process",
    "cycle",
    "complete",
    "complete_multipartite",
    "named",
)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("K_n needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def complete_multipartite(parts) -> Graph:
    parts = [int(p) for p in parts]
    if not parts or any(p < 1 for p in parts):
        raise InputError("part sizes must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    edges = [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]]
    return Graph.from_edges(n, edges, name="K_" + ",".join(map(str, parts)))


def wheel(rim: int) -> Graph:
    """Hub 0 joined to a cycle on 1..rim."""
    if rim < 3:
        raise InputError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges, name=f"W{rim}")


def mycielski(g: Graph) -> Graph:
    """Mycielskian: copies u_i of each v_i adjacent to N(v_i), plus an apex on all u_i."""
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph.from_edges(2 * n + 1, edges, name=f"M({g.name})" if g.name else "")


def kneser(n: int, k: int) -> Graph:
    if k < 1 or n < 2 * k:
        raise InputError("kneser(n, k) needs k >= 1 and n >= 2k")
    subsets = list(combinations(range(n), k))
    masks = [sum(1 << x for x in s) for s in subsets]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if masks[i] & masks[j] == 0]
    return Graph.from_edges(len(subsets), edges, name=f"K({n},{k})")


def shift(n: int) -> Graph:
    """Shift graph: pairs i < j of [n], with (i, j) ~ (j, l)."""
    if n < 3:
        raise InputError("shift graph needs n >= 3")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [(index[(i, j)], index[(j, l)]) for (i, j) in pairs for l in range(j + 1, n)]
    return Graph.from_edges(len(pairs), edges, name=f"Shift({n})")


def triangle_free_process(n: int, seed: int) -> Graph:
    """Visit all vertex pairs in a seeded random order, adding each pair that
    closes no triangle. One pass already yields a maximal triangle-free graph."""
    if n < 1:
        raise InputError("need n >= 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    nbr = [0] * n
    edges = []
    for u, v in pairs:
        if nbr[u] & nbr[v] == 0:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            edges.append((u, v))
    return Graph.from_edges(n, edges, name=f"TFP({n},{seed})")


def join(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(g.n + u, g.n + v) for u, v in h.edges]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges, name=f"{g.name}+{h.name}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(g.n + u, g.n + v) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n, edges, name=f"{g.name}|{h.name}")


def hajos(g: Graph, h: Graph) -> Graph:
    """Hajos construction on the edges (0, 1) of ``g`` and of ``h``: identify
    vertex 0 of both, delete both edges, join the two vertices 1."""
    if not (g.has_edge(0, 1) and h.has_edge(0, 1)):
        raise InputError("both graphs need the edge (0, 1)")
    off = g.n - 1

    def hv(v):
        return 0 if v == 0 else v + off

    edges = [e for e in g.edges if e != (0, 1)]
    edges += [(hv(u), hv(v)) for u, v in h.edges if (u, v) != (0, 1)]
    edges.append((1, hv(1)))
    return Graph.from_edges(g.n + h.n - 1, edges, name=f"Hajos({g.name},{h.name})")


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges, name="Petersen")


def grotzsch() -> Graph:
    return mycielski(cycle(5)).renamed("Grotzsch")


def theta(a: int, b: int, c: int) -> Graph:
    """Two branch vertices 0 and 1 joined by internally disjoint paths with a, b, c edges."""
    if min(a, b, c) < 1 or sorted((a, b, c))[:2] == [1, 1]:
        raise InputError("theta needs path lengths >= 1 with at most one of length 1")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges, name=f"Theta({a},{b},{c})")


def glue_cliques(size: int, shared: int) -> Graph:
    """Two copies of K_size sharing ``shared`` vertices (0..shared-1)."""
    second = list(range(shared)) + list(range(size, 2 * size - shared))
    edges = set(combinations(range(size), 2)) | set(combinations(second, 2))
    return Graph.from_edges(2 * size - shared, edges, name=f"2K{size}^{shared}")


def pendant(g: Graph, v: int = 0) -> Graph:
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n)], name=f"{g.name}+pendant")


def _named(name: str, params: dict) -> Graph:
    if name == "petersen":
        return petersen()
    if name == "grotzsch":
        return grotzsch()
    if name == "wheel":
        return wheel(params["n"])
    if name == "path":
        return path(params["n"])
    if name == "theta":
        return theta(params["a"], params["b"], params["c"])
    if name == "hajos":
        k = params["k"]
        return hajos(complete(k), complete(k)).renamed(f"Hajos(K{k},K{k})")
    if name == "glued_cliques":
        return glue_cliques(params["size"], params["shared"])
    if name == "clique_join_cycle":
        return join(complete(params["a"]), cycle(params["b"]))
    if name == "clique_pendant":
        return pendant(complete(params["n"]))
    raise InputError(f"unknown named graph {name!r}")


NAMED_PARAMS = {
    "petersen": (),
    "grotzsch": (),
    "wheel": ("n",),
    "path": ("n",),
    "theta": ("a", "b", "c"),
    "hajos": ("k",),
    "glued_cliques": ("size", "shared"),
    "clique_join_cycle": ("a", "b"),
    "clique_pendant": ("n",),
}

FAMILY_PARAMS = {
    "kneser": ("n", "k"),
    "shift": ("n",),
    "triangle_free_process": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "mycielski": ("times",),
}


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible recipe for a graph.

    ``params`` holds integers, except ``parts`` (list of part sizes) for
    complete multipartite graphs. ``base`` is the starting graph of a
    Mycielski chain (K2 when absent).
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    name: str = ""
    base: "GeneratorSpec | None" = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family == "named" and self.name not in NAMED_PARAMS:
            raise InputError(f"unknown named graph {self.name!r}")

    def __hash__(self):
        return hash(self.text())

    @property
    def id(self) -> str:
        return self.text()

    def text(self) -> str:
        if self.family == "named":
            keys = NAMED_PARAMS[self.name]
            args = ",".join(str(self.params[k]) for k in keys)
            return f"{self.name}:{args}" if args else self.name
        if self.family == "complete_multipartite":
            return "complete_multipartite:" + ",".join(map(str, self.params["parts"]))
        if self.family == "triangle_free_process":
            return f"triangle_free_process:{self.params['n']},{self.seed}"
        args = ",".join(str(self.params[k]) for k in FAMILY_PARAMS[self.family])
        out = f"{self.family}:{args}"
        if self.family == "mycielski" and self.base is not None:
            out += "@" + self.base.text()
        return out

    def to_json(self) -> dict:
        out = {"family": self.family, "params": dict(self.params)}
        if self.family == "triangle_free_process":
            out["seed"] = self.seed
        if self.name:
            out["name"] = self.name
        if self.base is not None:
            out["base"] = self.base.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "GeneratorSpec":
        if not isinstance(obj, dict) or "family" not in obj:
            raise InputError('generator spec needs a "family"')
        base = cls.from_json(obj["base"]) if obj.get("base") else None
        return cls(obj["family"], dict(obj.get("params", {})), int(obj.get("seed", 0)), obj.get("name", ""), base)


def parse_spec(text: str) -> GeneratorSpec:
    """Parse ``family:a,b,...`` text, e.g. ``kneser:5,2``, ``mycielski:2@cycle:7``,
    ``triangle_free_process:30,42`` (n, seed), ``petersen``, ``wheel:5``."""
    text = text.strip()
    head, _, base_text = text.partition("@")
    fam, _, argtext = head.partition(":")
    try:
        args = [int(a) for a in argtext.split(",")] if argtext else []
    except ValueError:
        raise InputError(f"bad generator arguments in {text!r}") from None
    base = parse_spec(base_text) if base_text else None
    if fam in NAMED_PARAMS:
        keys = NAMED_PARAMS[fam]
        if len(args) != len(keys):
            raise InputError(f"{fam} takes {len(keys)} argument(s)")
        return GeneratorSpec("named", dict(zip(keys, args)), name=fam)
    if fam == "complete_multipartite":
        return GeneratorSpec(fam, {"parts": args})
    if fam == "triangle_free_process":
        if len(args) != 2:
            raise InputError("triangle_free_process takes n,seed")
        return GeneratorSpec(fam, {"n": args[0]}, seed=args[1])
    if fam in FAMILY_PARAMS:
        keys = FAMILY_PARAMS[fam]
        if len(args) != len(keys):
            raise InputError(f"{fam} takes {len(keys)} argument(s)")
        return GeneratorSpec(fam, dict(zip(keys, args)), base=base)
    raise InputError(f"unknown generator {fam!r}")


def generate(spec: GeneratorSpec) -> Graph:
    f, p = spec.family, spec.params
    try:
        if f == "cycle":
            g = cycle(p["n"])
        elif f == "complete":
            g = complete(p["n"])
        elif f == "complete_multipartite":
            g = complete_multipartite(p["parts"])
        elif f == "kneser":
            g = kneser(p["n"], p["k"])
        elif f == "shift":
            g = shift(p["n"])
        elif f == "triangle_free_process":
            g = triangle_free_process(p["n"], spec.seed)
        elif f == "mycielski":
            times = p["times"]
            if times < 0:
                raise InputError("times must be >= 0")
            g = generate(spec.base) if spec.base is not None else complete(2)
            for _ in range(times):
                g = mycielski(g)
        else:
            g = _named(spec.name, p)
    except KeyError as exc:
        raise InputError(f"missing parameter {exc} for {f}") from None
    return g.renamed(spec.text())
