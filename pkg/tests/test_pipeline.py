import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclespec.bounds import power
from cyclespec.coloring import chromatic_at_least
from cyclespec.errors import InputError, PipelineError, PreconditionError
from cyclespec.generators import complete, complete_multipartite, cycle, disjoint_union, generate, glue_cliques, join, parse_spec
from cyclespec.graph import Graph, connectivity_at_least, delete_edge, is_cycle, is_bipartite_with, menger_disjoint_paths
from cyclespec.pipeline import (
    consecutive_cycles_pipeline,
    double_cover_cycles,
    extract_long_cycle,
    nearly_3_connected,
    paths_all_lengths,
    splice_three_bound,
    splice_three_paths,
    splice_two_bound,
    splice_two_paths,
)
from cyclespec.suites import splice_instance

from conftest import all_path_lengths, brute_chi, dp_spectrum


# nearly 3-connected reduction


def _assert_postconditions(g, k, out):
    eu, ev = out.estar_local
    rest = delete_edge(out.gstar, eu, ev)
    for u, v in rest.edges:
        assert g.has_edge(g.index_of(rest.labels[u]), g.index_of(rest.labels[v]))
    assert brute_chi(rest) >= k - 1
    assert connectivity_at_least(out.gstar, 3)[0]
    assert max(dp_spectrum(out.gstar)) <= max(dp_spectrum(g))


def test_nearly3_on_k4():
    out = nearly_3_connected(complete(4), 4)
    assert out.already_3_connected and out.estar == (0, 1) and out.gstar.n == 4


def test_nearly3_two_k4_sharing_an_edge():
    g = glue_cliques(4, 2)
    out = nearly_3_connected(g, 4)
    # criticality already strips the second K4, so no 2-cut remains
    assert out.already_3_connected and out.gstar.n == 4
    assert out.circumference_gstar == 4 and out.circumference_g == 6
    _assert_postconditions(g, 4, out)


def test_nearly3_two_k4_sharing_a_vertex():
    out = nearly_3_connected(glue_cliques(4, 1), 4)
    assert out.already_3_connected and out.gstar.n == 4


def test_nearly3_uses_two_cut_on_hajos():
    g = generate(parse_spec("hajos:4"))
    out = nearly_3_connected(g, 4)
    assert not out.already_3_connected
    assert out.cut == (0, 1) and out.component == (2, 3)
    # u v is not an edge of g, so e* is added and a bypass through the other side recorded
    assert not g.has_edge(0, 1)
    assert out.bypass[0] == 0 and out.bypass[-1] == 1 and len(out.bypass) >= 3
    _assert_postconditions(g, 4, out)


@pytest.mark.parametrize("spec", ["hajos:5", "wheel:5", "grotzsch", "clique_join_cycle:3,5", "kneser:6,2"])
def test_nearly3_postconditions_on_corpus(spec):
    g = generate(parse_spec(spec))
    k = brute_chi(g)
    _assert_postconditions(g, k, nearly_3_connected(g, k))


def test_nearly3_preconditions():
    with pytest.raises(PreconditionError):
        nearly_3_connected(cycle(5), 4)
    with pytest.raises(PreconditionError):
        nearly_3_connected(complete(3), 3)


# paths of every length in a chorded cycle


def test_chorded_c4():
    h = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    res = paths_all_lengths(h, [0, 1, 2, 3], [0], [1, 2, 3])
    assert res.lengths == [1, 2, 3] and not res.bipartite_exception
    for length, p in res.paths.items():
        assert len(p) == length + 1 and p[0] == 0


def test_chorded_c6_bipartite_exception():
    h = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    res = paths_all_lengths(h, list(range(6)), [0, 2, 4], [1, 3, 5])
    assert res.bipartite_exception
    assert res.lengths == [1, 3, 5]


def test_chorded_input_errors():
    ring = [(i, (i + 1) % 5) for i in range(5)]
    with pytest.raises(InputError):
        paths_all_lengths(Graph.from_edges(5, ring), list(range(5)), [0], [1, 2, 3, 4])
    h = Graph.from_edges(5, ring + [(0, 2)])
    with pytest.raises(InputError):
        paths_all_lengths(h, list(range(5)), [0, 1], [1, 2, 3, 4])
    with pytest.raises(InputError):
        paths_all_lengths(h, list(range(5)), [], list(range(5)))
    with pytest.raises(InputError):
        paths_all_lengths(h, [0, 2, 1, 3, 4], [0], [1, 2, 3, 4])
    with pytest.raises(InputError):
        paths_all_lengths(h, list(range(5)), [0], [1, 2, 3, 4], chord=(1, 3))


@st.composite
def chorded_instances(draw):
    n = draw(st.integers(4, 8))
    chords = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    picked = draw(st.lists(st.sampled_from(chords), min_size=1, unique=True))
    mask = draw(st.integers(1, (1 << n) - 2))
    h = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + picked)
    a = [v for v in range(n) if mask >> v & 1]
    b = [v for v in range(n) if not mask >> v & 1]
    return h, a, b


@settings(max_examples=300, deadline=None)
@given(chorded_instances())
def test_chorded_paths_match_enumeration(inst):
    h, a, b = inst
    oracle = all_path_lengths(h)
    real = set().union(*(oracle[(u, v)] for u in a for v in b))
    res = paths_all_lengths(h, list(range(h.n)), a, b)
    assert set(res.lengths) == real
    assert res.bipartite_exception == is_bipartite_with(h, a)
    if not res.bipartite_exception:
        assert res.lengths == list(range(1, h.n))


# consecutive cycles from BFS layers


def _check_trace(g, trace):
    lengths = trace.lengths
    assert lengths == list(range(2 * trace.r + 1, 2 * trace.r + len(trace.chorded_cycle)))
    assert len(lengths) >= 3
    for cyc in trace.cycles:
        assert is_cycle(g, [g.index_of(x) for x in cyc])
    chis = [s.chi for s in trace.stages]
    assert chis[0] >= 4 * trace.k and chis[1] >= 2 * trace.k and chis[2] >= trace.k
    json.dumps(trace.to_json())


def test_pipeline_on_k16():
    g = complete(16)
    trace = consecutive_cycles_pipeline(g, 4)
    _check_trace(g, trace)


def test_pipeline_on_complete_multipartite():
    g = complete_multipartite([2] * 16)
    trace = consecutive_cycles_pipeline(g, 4)
    _check_trace(g, trace)
    assert trace.r >= 1


def test_pipeline_on_clique_join_cycle():
    g = join(complete(14), cycle(5))
    _check_trace(g, consecutive_cycles_pipeline(g, 4))


def test_pipeline_is_deterministic():
    g = complete_multipartite(list(range(1, 17)))
    a = consecutive_cycles_pipeline(g, 4).to_json()
    b = consecutive_cycles_pipeline(g, 4).to_json()
    assert json.dumps(a) == json.dumps(b)


def test_pipeline_preconditions():
    with pytest.raises(PreconditionError):
        consecutive_cycles_pipeline(cycle(5), 4)
    with pytest.raises(PreconditionError):
        consecutive_cycles_pipeline(complete(16), 3)


# splicing


def test_splice_bounds_are_exact_rationals():
    assert splice_two_bound(9, 6, 3) == 9
    assert splice_two_bound(3, 3, 2) == 3
    assert splice_three_bound(9, 6) == 10
    assert splice_three_bound(6, 6) == 8
    assert isinstance(splice_two_bound(7, 5, 3), Fraction)


def test_splice_two_triangles():
    c, cp = [0, 1, 2], [3, 4, 5]
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)])
    cyc = splice_two_paths(c, cp, [[0, 3], [1, 4]])
    assert is_cycle(g, cyc) and len(cyc) >= 3
    assert len(cyc) == 6


def test_splice_three_hexagons():
    c, cp = list(range(6)), list(range(6, 12))
    paths = [[0, 6], [2, 8], [4, 10]]
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6 + i, 6 + (i + 1) % 6) for i in range(6)] + [tuple(p) for p in paths]
    g = Graph.from_edges(12, edges)
    best = splice_three_paths(c, cp, *paths)
    assert is_cycle(g, best) and len(best) >= 8
    assert len(best) == max(dp_spectrum(g))


def test_double_cover_counts():
    g, c, cp, paths = splice_instance(3)
    while len(paths) < 3:
        g, c, cp, paths = splice_instance(random.Random(len(c)).randint(100, 200))
    cycles = double_cover_cycles(c, cp, *paths[:3])
    count = {}
    for cyc in cycles:
        assert is_cycle(g, cyc)
        for i in range(len(cyc)):
            e = tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))
            count[e] = count.get(e, 0) + 1
    used = {tuple(sorted((c[i], c[(i + 1) % len(c)]))) for i in range(len(c))}
    used |= {tuple(sorted((cp[i], cp[(i + 1) % len(cp)]))) for i in range(len(cp))}
    for p in paths[:3]:
        used |= {tuple(sorted(e)) for e in zip(p, p[1:])}
    assert set(count) == used and set(count.values()) == {2}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_splice_inequalities_on_random_instances(seed):
    g, c, cp, paths = splice_instance(seed)
    two = splice_two_paths(c, cp, paths)
    assert is_cycle(g, two)
    assert len(two) >= splice_two_bound(len(c), len(cp), len(paths))
    if len(paths) >= 3:
        three = splice_three_paths(c, cp, *paths[:3])
        assert is_cycle(g, three)
        assert len(three) >= splice_three_bound(len(c), len(cp))


def test_splice_accepts_menger_family():
    g, c, cp, _ = splice_instance(11)
    fam = menger_disjoint_paths(g, c, cp)
    assert is_cycle(g, splice_two_paths(c, cp, fam))


def test_splice_input_errors():
    with pytest.raises(InputError):
        splice_two_paths([0, 1, 2], [2, 3, 4], [[0, 3], [1, 4]])
    with pytest.raises(InputError):
        splice_two_paths([0, 1, 2], [3, 4, 5], [[0, 6, 3], [1, 6, 4]])
    with pytest.raises(InputError):
        splice_two_paths([0, 1, 2], [3, 4, 5], [[0, 3]])
    with pytest.raises(InputError):
        splice_two_paths([0, 1, 2], [3, 4, 5], [[0], [1, 4]])
    with pytest.raises(InputError):
        splice_three_paths([0, 1, 2], [3, 4, 5], [0, 3], [1, 4], [1, 5])


# long cycles via the case split


def test_extract_base_case_c7():
    res = extract_long_cycle(cycle(7), 3, x0=3)
    assert res.case == "base" and len(res.cycle) == 7 and res.claim_holds


def test_extract_base_case_length_at_least_k():
    g = generate(parse_spec("grotzsch"))
    res = extract_long_cycle(g, 4)
    assert res.case == "base" and len(res.cycle) >= 4


def test_extract_two_k5_joined():
    g = disjoint_union(complete(5), complete(5))
    g = Graph.from_edges(10, list(g.edges) + [(0, 5), (1, 6), (2, 7)])
    res = extract_long_cycle(g, 5, x0=3)
    # the critical subgraph is one K5, so Case 1 returns its Hamiltonian cycle
    assert res.case == "case1" and len(res.cycle) == 5
    assert res.claim_holds
    assert res.case1_threshold == "35/8"


def test_extract_thresholds_use_beta():
    res = extract_long_cycle(complete(6), 6, f=power(2), x0=3, eta=Fraction(1, 3))
    # beta = alpha + 1 = 3
    assert res.case1_threshold == str((1 - Fraction(1, 9)) * 6)
    assert res.case2_threshold == str((1 - Fraction(1, 12)) * 6)


def test_extract_degenerate_branch_returns_valid_cycle():
    edges = [(0, 2), (0, 3), (0, 9), (0, 11), (0, 12), (1, 7), (1, 10), (1, 11), (2, 6), (2, 8), (2, 9), (2, 10),
             (3, 5), (3, 6), (3, 7), (3, 10), (3, 11), (4, 5), (4, 7), (4, 9), (4, 10), (5, 11), (6, 9), (7, 8),
             (7, 9), (7, 11), (7, 12), (8, 9), (9, 11), (10, 12)]
    g = Graph.from_edges(13, edges)
    res = extract_long_cycle(g, 4, x0=1)
    assert res.case == "degenerate" and res.chi1 == 3
    assert Fraction(res.case1_threshold) > res.chi1
    assert is_cycle(g, [g.index_of(x) for x in res.cycle]) and res.claim_holds


def test_extract_parameter_errors():
    with pytest.raises(PreconditionError):
        extract_long_cycle(cycle(6), 3)
    with pytest.raises(InputError):
        extract_long_cycle(cycle(5), 3, eta=Fraction(3, 2))
    with pytest.raises(InputError):
        extract_long_cycle(cycle(5), 3, x0=0)
