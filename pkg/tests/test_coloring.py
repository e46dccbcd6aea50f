import pytest
from hypothesis import given, settings

from cyclespec.coloring import (
    chi,
    chromatic_at_least,
    chromatic_number,
    dsatur_coloring,
    find_k_critical,
    greedy_coloring,
    has_clique_of_size,
    independence_number,
    is_independent,
    is_k_critical,
    is_proper,
    k_coloring,
    max_clique,
    verify_cut_lemma,
    CriticalWitness,
)
from cyclespec.errors import Budget, BudgetExceeded, InputError, PreconditionError
from cyclespec.generators import complete, cycle, generate, grotzsch, kneser, mycielski, parse_spec, petersen, wheel
from cyclespec.graph import Graph, induced_subgraph

from conftest import brute_alpha, brute_chi, graphs, to_nx

import networkx as nx


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_chi_matches_brute_force(g):
    cert = chromatic_number(g)
    assert cert.k == brute_chi(g)
    assert is_proper(g, cert.colors)
    assert len(set(cert.colors)) == cert.k


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_alpha_matches_brute_force(g):
    alpha, s = independence_number(g)
    assert alpha == brute_alpha(g) == len(s)
    assert is_independent(g, s)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_max_clique_matches_networkx(g):
    clique = max_clique(g)
    size = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert len(clique) == size
    assert all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :])


@given(graphs(max_n=9))
def test_heuristic_colorings_are_proper(g):
    assert is_proper(g, greedy_coloring(g))
    assert is_proper(g, dsatur_coloring(g))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_k_coloring_decision(g):
    k = brute_chi(g)
    if k > 0:
        assert k_coloring(g, k - 1) is None
        assert chromatic_at_least(g, k) and not chromatic_at_least(g, k + 1)
    colors = k_coloring(g, k)
    assert colors is not None and is_proper(g, colors) and max(colors, default=-1) < k


@pytest.mark.parametrize(
    "spec, k",
    [
        ("cycle:5", 3),
        ("cycle:6", 2),
        ("petersen", 3),
        ("grotzsch", 4),
        ("mycielski:3", 5),
        ("kneser:5,2", 3),
        ("kneser:6,2", 4),
        ("kneser:7,3", 3),
        ("kneser:7,2", 5),
        ("wheel:5", 4),
        ("wheel:6", 3),
        ("complete:7", 7),
        ("complete_multipartite:1,2,3,4", 4),
        ("hajos:4", 4),
        ("shift:8", 3),
    ],
)
def test_known_chromatic_numbers(spec, k):
    assert chi(generate(parse_spec(spec))) == k


def test_certificate_json():
    out = chromatic_number(petersen()).to_json()
    assert out["k"] == 3 and out["optimal"] is True and len(out["colors"]) == 10


def test_budget_exhaustion_reports_bounds():
    with pytest.raises(BudgetExceeded) as info:
        chromatic_number(generate(parse_spec("mycielski:3")), Budget(20))
    assert info.value.upper is not None
    assert info.value.lower is None or info.value.lower <= 5 <= info.value.upper


def test_clique_probe():
    assert has_clique_of_size(wheel(3), 4) == [0, 1, 2, 3]
    assert has_clique_of_size(petersen(), 3) is None


@pytest.mark.parametrize("g, k", [(cycle(7), 3), (complete(5), 5), (grotzsch(), 4), (wheel(5), 4)])
def test_critical_graphs_are_critical(g, k):
    assert is_k_critical(g, k)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_find_k_critical(g):
    k = brute_chi(g)
    w = find_k_critical(g, k)
    h = w.subgraph
    assert is_k_critical(h, k)
    assert h.min_degree() >= k - 1
    for u, v in h.edges:
        assert g.has_edge(g.index_of(h.labels[u]), g.index_of(h.labels[v]))


def test_find_k_critical_precondition():
    with pytest.raises(PreconditionError):
        find_k_critical(cycle(6), 3)


def test_petersen_contains_c5_as_critical():
    w = find_k_critical(petersen(), 3)
    assert w.subgraph.n == 5 and w.subgraph.m == 5


def test_cut_lemma_rejects_non_cut():
    # hub plus one rim vertex leaves a path on the other four rim vertices
    w = CriticalWitness(wheel(5), 4)
    with pytest.raises(InputError):
        verify_cut_lemma(w, [0, 1])


def test_cut_lemma_on_wheel():
    w = CriticalWitness(wheel(5), 4)
    rep = verify_cut_lemma(w, [0, 1, 3])
    assert rep.holds
    assert sorted(c for _, c in rep.component_chi) == [1, 2]


def test_cut_lemma_on_hajos():
    g = generate(parse_spec("hajos:4"))
    w = find_k_critical(g, 4)
    assert w.subgraph.n == g.n
    rep = verify_cut_lemma(w, [0, 1])
    # one side keeps a triangle, the other a path with chi 2 = k - |S|
    assert rep.holds
    assert min(c for _, c in rep.component_chi) == 2


def test_mycielski_raises_chi_and_keeps_triangle_free():
    from cyclespec.graph import is_triangle_free

    g = Graph.from_edges(2, [(0, 1)])
    for expected in (3, 4, 5):
        g = mycielski(g)
        assert chi(g) == expected
        assert is_triangle_free(g)


def test_kneser_formula():
    for n, k in [(5, 2), (6, 2), (7, 3), (7, 2), (8, 3)]:
        assert chi(kneser(n, k)) == n - 2 * k + 2
