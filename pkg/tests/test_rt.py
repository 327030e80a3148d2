import dataclasses

import networkx as nx
import pytest

from crossbound.errors import GraphError
from crossbound.generators import complete, corpus, hub_instance
from crossbound.graph import MultiGraph, chords, hanging_count
from crossbound.planarity import PlanarizingSet
from crossbound.rt import (
    CASES,
    LEMMA0_HANGING,
    LEMMA0_LENGTH,
    ProcedureTrace,
    lemma0_cycle,
    rt_find_cycle,
    validate_trace,
)


def _nx_h(g: MultiGraph, c) -> int:
    """Hanging count recomputed with networkx degrees."""
    ng = nx.MultiGraph()
    ng.add_edges_from(g.edges.values())
    return sum(ng.degree(v) - 2 for v in c.vertices if v != c.apex)


def _nx_chordless(g: MultiGraph, c) -> bool:
    sub = g.underlying_simple().subgraph(c.vertices)
    return sub.number_of_edges() == c.length


@pytest.mark.parametrize(
    "graph,length,h",
    [
        (nx.icosahedral_graph(), 3, 6),
        (nx.cubical_graph(), 4, 3),
        (nx.dodecahedral_graph(), 5, 4),
        (nx.octahedral_graph(), 3, 4),
    ],
)
def test_lemma0_platonic(graph, length, h):
    g = MultiGraph.from_networkx(graph)
    c = lemma0_cycle(g)
    c.validate(g)
    assert c.length == length and hanging_count(g, c) == h
    assert _nx_h(g, c) == h and _nx_chordless(g, c)


def test_lemma0_needs_min_degree_three():
    with pytest.raises(GraphError):
        lemma0_cycle(MultiGraph.from_pairs([(0, 1), (1, 2), (2, 0)]))


def test_k5_one_step():
    g = complete(5)
    c, tr = rt_find_cycle(g, [0])
    assert [s.case for s in tr.steps] == ["1", "BASE-LEMMA0"]
    assert tr.s == 1 <= tr.steps[0].t
    assert validate_trace(tr).valid
    assert not chords(g, c) and hanging_count(g, c) <= 1 + 36


def test_rejects_bad_inputs():
    with pytest.raises(GraphError):
        rt_find_cycle(complete(5), [])  # K5 - {} is not planar
    with pytest.raises(GraphError):
        rt_find_cycle(MultiGraph.from_pairs([(0, 1), (1, 2), (2, 0)]), [])


def test_accepts_planarizing_set_object():
    g = complete(5)
    c1, _ = rt_find_cycle(g, PlanarizingSet.of(g, [3]))
    c2, _ = rt_find_cycle(g, [3])
    assert c1 == c2


@pytest.mark.parametrize(
    "double,cases", [(False, ["2.2.3", "BASE-LEMMA0"]), (True, ["2.3.2", "1", "BASE-LEMMA0"])]
)
def test_hub_instances_reach_merge_cases(double, cases):
    g, es = hub_instance(40, double)
    c, tr = rt_find_cycle(g, es)
    assert [s.case for s in tr.steps] == cases
    assert validate_trace(tr).valid
    assert hanging_count(g, c) <= len(es) + 36 and not chords(g, c)


def test_small_hub_takes_triangle_case():
    # with few spokes both hubs stay below the degree threshold
    g, es = hub_instance(4)
    _, tr = rt_find_cycle(g, es)
    assert tr.steps[0].case == "2.2.2"


def test_corpus_covers_random_cases():
    seen = set()
    for _, g, es in corpus(420):
        c, tr = rt_find_cycle(g, es)
        seen.update(s.case for s in tr.steps)
        assert _nx_chordless(g, c)
        assert _nx_h(g, c) <= len(es) + 36
    assert seen >= {"BASE-LEMMA0", "1", "2.1.1", "2.1.2", "2.1.3", "2.2.1", "2.2.2", "2.3.1"}
    assert seen <= CASES


def test_planar_inputs_meet_short_cycle_bound():
    for _, g, es in corpus(150):
        if es:
            continue
        c, _ = rt_find_cycle(g, es)
        assert c.length <= LEMMA0_LENGTH and hanging_count(g, c) <= LEMMA0_HANGING


def _trace(seed_case="2.1.1"):
    for _, g, es in corpus(200):
        _, tr = rt_find_cycle(g, es)
        if any(s.case == seed_case for s in tr.steps):
            return tr
    raise AssertionError


def test_trace_roundtrip():
    tr = _trace()
    back = ProcedureTrace.from_dict(tr.to_dict())
    assert validate_trace(back).valid
    assert "case 2.1.1" in tr.to_text()


def test_validate_trace_catches_tampering():
    tr = _trace()
    steps = list(tr.steps)
    i = next(j for j, s in enumerate(steps) if s.case == "2.1.1")
    relabel = steps.copy()
    relabel[i] = dataclasses.replace(steps[i], case="2.1.2")
    assert not validate_trace(ProcedureTrace(tuple(relabel))).valid
    wrong_cycle = steps.copy()
    cyc = steps[i].cycle
    other = next(v for v in cyc.vertices if v != cyc.apex)
    wrong_cycle[i] = dataclasses.replace(steps[i], cycle=cyc.with_apex(other))
    rep = validate_trace(ProcedureTrace(tuple(wrong_cycle)))
    assert not rep.valid and rep.errors[0][0] == i
    assert not validate_trace(ProcedureTrace(tuple(steps[:-1]))).valid
    assert not validate_trace(ProcedureTrace(())).valid
