import networkx as nx
import pytest

from crossbound.errors import GraphError
from crossbound.generators import (
    circulant,
    complete,
    complete_bipartite,
    corpus,
    generate,
    hub_instance,
    planar_plus_edges,
    random_planar,
    star_subdivision,
)
from crossbound.planarity import planar_fast, skewness


def test_named_sizes():
    assert complete(5).m == 10
    assert complete_bipartite(3, 3).m == 9
    assert generate("petersen").m == 15
    assert circulant(8, [1, 3]).m == 16


def test_generate_errors():
    with pytest.raises(GraphError):
        generate("nope")
    with pytest.raises(GraphError):
        generate("complete", size=3)
    with pytest.raises(GraphError):
        generate("random_gnm", n=3, m=9)


@pytest.mark.parametrize("seed", range(10))
def test_random_planar_is_planar_min_degree_three(seed):
    g = random_planar(14, seed=seed, drop=0.3)
    assert planar_fast(g) and g.min_degree() >= 3 and g.is_simple()
    assert nx.check_planarity(g.underlying_simple())[0]


def test_random_planar_plus_edges_skewness():
    g = generate("random_planar_plus_edges", n=10, extra=2, seed=4)
    assert skewness(g).value <= 2


def test_determinism():
    assert generate("random_gnm", n=8, m=12, seed=5) == generate("random_gnm", n=8, m=12, seed=5)
    assert planar_plus_edges(10, 3, 7, 0.25, 2, 1) == planar_plus_edges(10, 3, 7, 0.25, 2, 1)


def test_corpus_members_satisfy_contract():
    for _, g, es in corpus(80):
        assert len(es) <= 4
        assert g.is_simple() and g.min_degree() >= 3
        assert planar_fast(g.remove_edges(es))


def test_hub_and_star_instances():
    g, es = hub_instance(10)
    assert not planar_fast(g) and planar_fast(g.remove_edges(es))
    g, es = hub_instance(10, double=True)
    assert len(es) == 2 and planar_fast(g.remove_edges(es))
    g, es = star_subdivision(2)
    assert len(es) == 6 and planar_fast(g.remove_edges(es)) and g.min_degree() >= 3
