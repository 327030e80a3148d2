import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from crossbound.arith import compare_weighted
from crossbound.errors import GraphError, TheoremViolation
from crossbound.generators import complete, complete_bipartite, petersen, random_gnm, random_planar
from crossbound.graph import MultiGraph, max_matching, preprocess_critical
from crossbound.planarity import (
    Embedding,
    PlanarizingSet,
    is_planar,
    optimal_planarizing_set,
    planar_fast,
    planarizing_sets,
    skewness,
    verify_lemma1,
)


def _is_kuratowski(g: MultiGraph, ids) -> bool:
    """Witness edges reduce to K5 or K3,3 after smoothing degree-2 vertices."""
    h = nx.Graph([g.endpoints(e) for e in ids])
    changed = True
    while changed:
        changed = False
        for v in list(h.nodes):
            if h.degree(v) == 2:
                a, b = list(h.neighbors(v))
                if not h.has_edge(a, b):
                    h.remove_node(v)
                    h.add_edge(a, b)
                    changed = True
    return nx.is_isomorphic(h, nx.complete_graph(5)) or nx.is_isomorphic(h, nx.complete_bipartite_graph(3, 3))


@pytest.mark.parametrize("g", [complete(5), complete_bipartite(3, 3), petersen(), complete(6)])
def test_nonplanar_has_kuratowski_witness(g):
    res = is_planar(g)
    assert not res
    assert _is_kuratowski(g, res.witness)


def test_planar_embedding_satisfies_euler():
    g = random_planar(12, seed=3)
    res = is_planar(g)
    assert res.planar
    res.embedding.check()
    assert res.embedding.face_count == 2 - g.n + g.m


def test_parallel_edges_embed():
    g = MultiGraph.from_pairs([(0, 1), (0, 1), (1, 2), (2, 0), (0, 1)])
    emb = is_planar(g).embedding
    emb.check()
    assert emb.face_count == 2 - 3 + 5


def test_bad_rotation_rejected():
    g = complete(4)
    rot = dict(is_planar(g).embedding.rotation)
    r0 = rot[0]
    rot[0] = (r0[1], r0[0], r0[2])  # reflect one vertex
    with pytest.raises(GraphError):
        Embedding(g, rot).check()


def test_disconnected_embedding():
    g = MultiGraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], [9])
    emb = is_planar(g).embedding
    emb.check()


@settings(max_examples=1000, deadline=None)
@given(st.integers(5, 9), st.data())
def test_euler_bound_and_embedding(n, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    g = random_gnm(n, m, data.draw(st.integers(0, 10**6)))
    res = is_planar(g)
    if m > 3 * n - 6:
        assert not res.planar
    if res.planar:
        res.embedding.check()
    else:
        assert _is_kuratowski(g, res.witness)


def _brute_skewness(g: MultiGraph) -> int:
    ids = g.edge_ids()
    for r in range(len(ids) + 1):
        for sub in itertools.combinations(ids, r):
            if planar_fast(g.remove_edges(sub)):
                return r
    raise AssertionError


@pytest.mark.parametrize(
    "g,expected",
    [(complete(5), 1), (complete_bipartite(3, 3), 1), (complete(6), 3), (petersen(), 2), (complete_bipartite(3, 4), 2)],
)
def test_skewness_named(g, expected):
    res = skewness(g)
    assert res.exact and res.value == expected
    assert planar_fast(g.remove_edges(res.witness.edges))


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 7), st.integers(0, 10**6))
def test_skewness_matches_brute_force(n, seed):
    m = min(3 * n - 6 + 3, n * (n - 1) // 2)
    g = random_gnm(n, m, seed)
    assert skewness(g).value == _brute_skewness(g)


def test_skewness_budget_exhausted():
    res = skewness(complete(6), budget=2)
    assert not res.exact and res.value is None and res.lower == 3


def test_planarizing_sets_are_exactly_the_planarizing_subsets():
    g = complete(5)
    got = list(planarizing_sets(g, 1))
    assert got == [(e,) for e in g.edge_ids()]
    g = complete_bipartite(3, 4)
    brute = [s for s in itertools.combinations(g.edge_ids(), 2) if planar_fast(g.remove_edges(s))]
    assert list(planarizing_sets(g, 2)) == brute


def _brute_optimal(g: MultiGraph, k: int):
    best = None
    for r in range(g.m + 1):
        for sub in itertools.combinations(g.edge_ids(), r):
            if not planar_fast(g.remove_edges(sub)):
                continue
            val = (r, len(max_matching(sub, g)))
            if best is None or compare_weighted(k, val, best) < 0:
                best = val
        if best is not None and compare_weighted(k, (r + 1, 0), best) >= 0:
            break
    return best


@pytest.mark.parametrize("k", [1, 2, 3, 4, 9])
@pytest.mark.parametrize("g", [complete(5), complete(6), complete_bipartite(3, 4), petersen()])
def test_optimal_planarizing_set_matches_brute_force(g, k):
    ps = optimal_planarizing_set(g, k)
    ps.check(g)
    assert ps.optimal_k == k
    assert (ps.t, ps.t_indep) == _brute_optimal(g, k)


def test_optimal_set_prefers_bigger_independent_trade():
    # K6: three edges are needed; a perfect matching of E costs t'=3, a star t'=1
    ps = optimal_planarizing_set(complete(6), 1)
    assert ps.t == 3 and ps.t_indep <= 2


def test_optimal_set_inexact_beyond_ceiling():
    ps = optimal_planarizing_set(complete(6), 1, max_edges=10)
    assert not ps.exact and ps.optimal_k is None
    ps.check(complete(6))


def test_planarizing_set_check():
    with pytest.raises(GraphError):
        PlanarizingSet((), 0).check(complete(5))


@pytest.mark.parametrize(
    "g,k", [(complete(5), 1), (complete_bipartite(3, 3), 1), (complete(6), 3), (petersen(), 2)]
)
def test_lemma1_on_critical_graphs(g, k):
    h, _ = preprocess_critical(g, k)
    rep = verify_lemma1(h, k)
    assert rep.ok and rep.k_prime <= k


def test_lemma1_violation_raises():
    # K6 is not 1-critical; skewness 3 > 1
    with pytest.raises(TheoremViolation):
        verify_lemma1(complete(6), 1)
