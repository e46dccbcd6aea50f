"""Cycle lengths, circumference and longest paths by exact depth-first search."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Budget, BudgetExceeded, InputError, as_budget
from .graph import Graph, bipartition, bfs_distances, girth, two_core


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _search_cycle(g: Graph, length: int, budget: Budget, core: set[int]) -> list[int] | None:
    """Lexicographically least cycle of ``length`` vertices, written from its
    smallest vertex with second vertex < last vertex.

    Prunes branches whose endpoint is too far from the anchor, whose
    reachable unvisited region is too small or misses the anchor, or (when
    every remaining vertex must be used) that strand a vertex of degree < 2.
    """
    adj, masks = g.adj, g.masks
    core_mask = 0
    for v in core:
        core_mask |= 1 << v
    for s in sorted(core):
        allowed = core_mask & ~((1 << (s + 1)) - 1)
        if _popcount(allowed) + 1 < length:
            break
        dist = bfs_distances(g, s, {v for v in core if v > s})
        if len(dist) < length:
            continue
        smask = masks[s]
        path = [s]

        def dfs(v, visited):
            depth = len(path)
            if depth == length:
                return (smask >> v) & 1 == 1 and path[1] < v
            left = length - depth
            avail = allowed & ~visited
            if left >= 3:
                reach = 0
                frontier = masks[v] & avail
                while frontier:
                    reach |= frontier
                    nxt = 0
                    while frontier:
                        low = frontier & -frontier
                        nxt |= masks[low.bit_length() - 1]
                        frontier ^= low
                    frontier = nxt & avail & ~reach
                if _popcount(reach) < left or not smask & reach:
                    return False
                if _popcount(avail) == left:
                    ends = avail | (1 << v) | (1 << s)
                    rest = avail
                    while rest:
                        low = rest & -rest
                        if _popcount(masks[low.bit_length() - 1] & ends) < 2:
                            return False
                        rest ^= low
            for w in adj[v]:
                if not (avail >> w) & 1 or dist.get(w, length) > left:
                    continue
                if depth == length - 1 and w < path[1]:
                    continue
                budget.tick()
                path.append(w)
                if dfs(w, visited | (1 << w)):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s):
            return path
    return None


def has_cycle_of_length(g: Graph, length: int, budget=None) -> list[int] | None:
    """A simple cycle on exactly ``length`` vertices, or ``None`` if provably absent.

    Raises ``BudgetExceeded`` when the search is inconclusive.
    """
    if not 3 <= length <= g.n:
        raise InputError(f"cycle length {length} outside [3, {g.n}]")
    core = two_core(g)
    if len(core) < length:
        return None
    return _search_cycle(g, length, as_budget(budget), core)


@dataclass
class CycleSpectrum:
    lengths: list[int]
    witnesses: dict[int, list[int]]
    exact: dict[int, bool]
    max_len: int

    @property
    def complete(self) -> bool:
        return all(self.exact.values())

    @property
    def circumference(self) -> int:
        return max(self.lengths, default=0)

    @property
    def circumference_exact(self) -> bool:
        c = self.circumference
        return all(ok for length, ok in self.exact.items() if length > c)

    @property
    def inexact_lengths(self) -> list[int]:
        return sorted(length for length, ok in self.exact.items() if not ok)

    def to_json(self) -> dict:
        start, run = longest_consecutive_run(self)
        out = {"lengths": list(self.lengths), "circumference": self.circumference, "run": {"start": start, "len": run}}
        if not self.complete:
            out["inexact"] = self.inexact_lengths
        return out


def full_spectrum(g: Graph, max_len: int | None = None, budget=None) -> CycleSpectrum:
    """Cycle lengths 3..min(max_len, n); each length gets its own search budget.

    ``budget`` is the per-length limit (int or ``None`` for the default).
    """
    top = g.n if max_len is None else min(max_len, g.n)
    limit = budget.limit if isinstance(budget, Budget) else budget
    core = two_core(g)
    two_coloring = bipartition(g)
    shortest = girth(g)
    lengths, witnesses, exact = [], {}, {}
    for length in range(3, top + 1):
        if length > len(core) or length < shortest or (two_coloring is not None and length % 2):
            exact[length] = True
            continue
        try:
            cyc = _search_cycle(g, length, Budget(limit), core)
        except BudgetExceeded:
            exact[length] = False
            continue
        exact[length] = True
        if cyc is not None:
            lengths.append(length)
            witnesses[length] = cyc
    return CycleSpectrum(lengths, witnesses, exact, top)


def longest_consecutive_run(s) -> tuple[int, int]:
    """(start, length) of the longest run of consecutive lengths; ties go to the smaller start."""
    lengths = sorted(set(s.lengths if isinstance(s, CycleSpectrum) else s))
    best = (0, 0)
    i = 0
    while i < len(lengths):
        j = i
        while j + 1 < len(lengths) and lengths[j + 1] == lengths[j] + 1:
            j += 1
        if j - i + 1 > best[1]:
            best = (lengths[i], j - i + 1)
        i = j + 1
    return best


def odd_even_counts(s: CycleSpectrum) -> tuple[int, int]:
    if not s.complete:
        raise BudgetExceeded(f"spectrum inexact at lengths {s.inexact_lengths}")
    odd = sum(1 for x in s.lengths if x % 2)
    return odd, len(s.lengths) - odd


# node expansions granted to the canonical search before a Hamiltonian graph
# falls back to the cycle built from its closure
HAMILTON_PROBE = 200_000


def _closure_additions(g: Graph) -> list[tuple[int, int]] | None:
    """Edges added by the Bondy-Chvatal closure (join non-adjacent u, v while
    deg u + deg v >= n), in order; ``None`` unless the closure is complete."""
    n = g.n
    nbr = [set(a) for a in g.adj]
    added = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if v not in nbr[u] and len(nbr[u]) + len(nbr[v]) >= n:
                    nbr[u].add(v)
                    nbr[v].add(u)
                    added.append((u, v))
                    changed = True
    return added if all(len(a) == n - 1 for a in nbr) else None


def _cycle_from_closure(g: Graph, added: list[tuple[int, int]]) -> list[int]:
    """Hamiltonian cycle of ``g`` from one of its complete closure, removing the
    added edges in reverse order and rotating around each one as it goes."""
    n = g.n
    nbr = [set(a) for a in g.adj]
    for u, v in added:
        nbr[u].add(v)
        nbr[v].add(u)
    cyc = list(range(n))
    for u, v in reversed(added):
        nbr[u].discard(v)
        nbr[v].discard(u)
        i = cyc.index(u)
        if cyc[(i + 1) % n] == v:
            path = cyc[i + 1 :] + cyc[: i + 1]
            path.reverse()
        elif cyc[i - 1] == v:
            path = cyc[i:] + cyc[:i]
        else:
            continue
        # path runs u ... v; u ~ path[j+1] and path[j] ~ v close a cycle without uv
        for j in range(1, n - 2):
            if path[j + 1] in nbr[u] and path[j] in nbr[v]:
                cyc = path[: j + 1] + path[:j:-1]
                break
        else:
            raise AssertionError("closure degree condition violated")
    return cyc


def longest_cycle(g: Graph, budget=None) -> list[int] | None:
    """A longest cycle, searching lengths downward from the size of the 2-core.

    When the closure of ``g`` is complete the graph is Hamiltonian. The canonical
    search then gets ``HAMILTON_PROBE`` expansions; if it stalls, the
    (non-canonical) cycle built from the closure is returned instead.
    """
    budget = as_budget(budget)
    core = two_core(g)
    if g.n >= 3 and len(core) == g.n:
        added = _closure_additions(g)
        if added is not None:
            probe = Budget(min(HAMILTON_PROBE, budget.remaining))
            try:
                cyc = _search_cycle(g, g.n, probe, core)
            except BudgetExceeded:
                cyc = _cycle_from_closure(g, added)
            budget.tick(probe.used)
            return cyc
    for length in range(len(core), 2, -1):
        cyc = _search_cycle(g, length, budget, core)
        if cyc is not None:
            return cyc
    return None


def circumference(g: Graph, budget=None) -> int:
    cyc = longest_cycle(g, budget)
    return 0 if cyc is None else len(cyc)


def paths_of_length(g: Graph, edges: int, budget=None):
    """Yield every simple path with ``edges`` edges once, oriented first < last,
    in lexicographic order."""
    budget = as_budget(budget)
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def dfs(v):
            if len(path) == edges + 1:
                if path[0] < path[-1] or edges == 0:
                    yield list(path)
                return
            for w in adj[v]:
                if w in on_path:
                    continue
                budget.tick()
                path.append(w)
                on_path.add(w)
                yield from dfs(w)
                path.pop()
                on_path.discard(w)

        yield from dfs(s)


def paths_longest_first(g: Graph, budget=None):
    """Yield simple paths (at least one edge) by decreasing length."""
    budget = as_budget(budget)
    for edges in range(g.n - 1, 0, -1):
        yield from paths_of_length(g, edges, budget)


def longest_path(g: Graph, budget=None) -> list[int] | None:
    return next(paths_longest_first(g, budget), None)
