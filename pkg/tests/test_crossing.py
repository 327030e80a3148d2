import pytest
from hypothesis import given, settings, strategies as st

from crossbound.crossing import (
    Drawing,
    build_drawing,
    crossing_number,
    crossing_number_naive,
    crossings_on_path,
    is_k_crossing_critical,
    planar_drawing,
)
from crossbound.errors import GraphError
from crossbound.generators import complete, complete_bipartite, random_gnm, random_planar
from crossbound.graph import MultiGraph
from crossbound.planarity import skewness


def zarankiewicz(m: int, n: int) -> int:
    return (m // 2) * ((m - 1) // 2) * (n // 2) * ((n - 1) // 2)


def guy(n: int) -> int:
    return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4


def test_named_values(named):
    for name, (g, cr) in named.items():
        res = crossing_number(g)
        assert res.exact and res.value == cr, name
        assert crossing_number_naive(g) == cr, name
        res.drawing.validate()
        assert res.drawing.crossing_count == cr


@pytest.mark.parametrize("n", [4, 5, 6])
def test_complete_graphs_follow_known_formula(n):
    assert crossing_number(complete(n)).value == guy(n)


@pytest.mark.parametrize("a,b", [(3, 3), (3, 4), (3, 5)])
def test_bipartite_follow_known_formula(a, b):
    assert crossing_number(complete_bipartite(a, b)).value == zarankiewicz(a, b)


def test_budget_exhaustion_is_inexact():
    res = crossing_number(complete(6), 2)
    assert not res.exact and res.value is None and res.lower == 3


def test_naive_guard():
    with pytest.raises(GraphError):
        crossing_number_naive(complete(6), upper=4)


def test_build_drawing_rejects_unrealizable():
    g = complete(5)
    assert build_drawing(g) is None
    # 0-1 and 2-3 crossing: K5 with that crossing is drawable
    d = build_drawing(g, [(0, 7)])
    assert d is not None
    d.validate()
    assert d.crossings() == {5: (0, 7)}


def test_build_drawing_order_mismatch():
    with pytest.raises(GraphError):
        build_drawing(complete(5), [(0, 7)], {0: (0, 1)})


def test_drawing_roundtrip_and_text():
    d = crossing_number(complete(5)).drawing
    back = Drawing.from_dict(d.to_dict())
    back.validate()
    assert back.rotation == d.rotation and back.edge_paths == d.edge_paths
    text = d.to_text()
    assert text.count("dummy ") == 1 and text.count("\nedge ") == 10


def test_validate_catches_broken_dummy():
    d = crossing_number(complete(5)).drawing
    x = next(iter(d.dummies))
    rot = dict(d.rotation)
    r = rot[x]
    rot[x] = (r[1], r[0], r[2], r[3])
    bad = Drawing(d.graph, d.planarization, rot, d.dummies, d.edge_paths, d.segments)
    with pytest.raises(GraphError):
        bad.validate()


def test_planar_drawing():
    g = random_planar(10, seed=1)
    d = planar_drawing(g)
    d.validate()
    assert d.crossing_count == 0
    with pytest.raises(GraphError):
        planar_drawing(complete(5))


def test_crossings_on_path_counts_distinct():
    d = crossing_number(complete(6)).drawing
    pairs = d.crossings()
    a, b = next(iter(pairs.values()))
    # two edges crossing each other share that one point
    assert crossings_on_path(d, [a, b]) == len({x for e in (a, b) for x in d.edge_paths[e][1:-1]})
    assert crossings_on_path(d, d.graph.edge_ids()) == d.crossing_count
    with pytest.raises(GraphError):
        crossings_on_path(d, [999])


def test_criticality_certificates(named):
    for name, k in [("K5", 1), ("K3,3", 1), ("K6", 3), ("K3,4", 2), ("Petersen", 2)]:
        g, cr = named[name]
        cert = is_k_crossing_critical(g, k)
        assert cert.critical, name
        assert cert.cr == cr
        assert len(cert.deletions) == g.m and cert.max_deletion == k - 1
    assert not is_k_crossing_critical(complete(4), 1).critical
    assert not is_k_crossing_critical(complete(6), 1).critical  # K6 - e still has crossings


def test_deletion_values_match_naive():
    g = complete_bipartite(3, 4)
    cert = is_k_crossing_critical(g, 2)
    for e, v in cert.deletions.items():
        assert v == crossing_number_naive(g.remove_edges([e]))


def test_multigraph_loops_rejected():
    with pytest.raises(GraphError):
        crossing_number(MultiGraph.from_pairs([(0, 0), (0, 1)]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 9))
def test_subdividing_an_edge_keeps_cr(seed, pick):
    g = random_gnm(6, 11, seed)
    e = g.edge_ids()[pick % g.m]
    u, v = g.endpoints(e)
    w = max(g.vertices) + 1
    h = g.remove_edges([e])
    h, _ = h.add_edge(u, w)
    h, _ = h.add_edge(w, v)
    assert crossing_number(h).value == crossing_number(g).value


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_skewness_at_most_cr(seed):
    g = random_gnm(7, 13, seed)
    res = crossing_number(g)
    if res.exact:
        assert skewness(g).value <= res.value
