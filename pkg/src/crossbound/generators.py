"""Deterministic graph families for tests and campaigns."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator

import networkx as nx

from .errors import GraphError
from .graph import MultiGraph


def complete(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return MultiGraph.from_pairs(itertools.combinations(range(n), 2), range(n))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs positive sides")
    return MultiGraph.from_pairs(((i, a + j) for i in range(a) for j in range(b)), range(a + b))


def petersen() -> MultiGraph:
    return MultiGraph.from_networkx(nx.petersen_graph())


def circulant(n: int, jumps: list[int] | tuple[int, ...]) -> MultiGraph:
    if n < 3 or not jumps:
        raise GraphError("circulant needs n >= 3 and at least one jump")
    pairs = set()
    for i in range(n):
        for j in jumps:
            if j % n == 0:
                raise GraphError(f"jump {j} is a multiple of n")
            pairs.add(tuple(sorted((i, (i + j) % n))))
    return MultiGraph.from_pairs(sorted(pairs), range(n))


def random_gnm(n: int, m: int, seed: int = 0) -> MultiGraph:
    all_pairs = list(itertools.combinations(range(n), 2))
    if m > len(all_pairs) or m < 0:
        raise GraphError(f"cannot place {m} edges on {n} vertices")
    rng = random.Random(seed)
    return MultiGraph.from_pairs(sorted(rng.sample(all_pairs, m)), range(n))


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _cross(p, q, r, s) -> bool:
    """Proper intersection of segments pq and rs (shared endpoints excluded)."""
    if len({p, q, r, s}) < 4:
        return False
    d1, d2 = _orient(p, q, r), _orient(p, q, s)
    d3, d4 = _orient(r, s, p), _orient(r, s, q)
    return d1 * d2 < 0 and d3 * d4 < 0


def _hull(pts: list[tuple[float, float]]) -> list[int]:
    """Indices of the convex hull (monotone chain)."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def chain(idx: list[int]) -> list[int]:
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and _orient(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower, upper = chain(order), chain(order[::-1])
    return lower[:-1] + upper[:-1]


def random_planar(n: int, seed: int = 0, drop: float = 0.0) -> MultiGraph:
    """Random simple planar graph on ``n`` vertices with minimum degree at least 3.

    Triangulates ``n - 1`` random points greedily (shortest segments first)
    and places vertex ``n - 1`` in the outer face, joined to every hull
    point. Then a fraction ``drop`` of edges is removed where both ends keep
    degree at least 3.
    """
    if n < 4:
        raise GraphError("random planar graph needs n >= 4")
    rng = random.Random(seed)
    pts = [(rng.random(), rng.random()) for _ in range(n - 1)]
    cand = sorted(
        itertools.combinations(range(n - 1), 2),
        key=lambda ij: (pts[ij[0]][0] - pts[ij[1]][0]) ** 2 + (pts[ij[0]][1] - pts[ij[1]][1]) ** 2,
    )
    chosen: list[tuple[int, int]] = []
    for i, j in cand:
        if not any(_cross(pts[i], pts[j], pts[a], pts[b]) for a, b in chosen):
            chosen.append((i, j))
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(chosen)
    g.add_edges_from((h, n - 1) for h in _hull(pts))
    order = sorted(g.edges())
    rng.shuffle(order)
    for u, v in order:
        if rng.random() < drop and g.degree(u) > 3 and g.degree(v) > 3:
            g.remove_edge(u, v)
    if min(d for _, d in g.degree()) < 3:
        raise GraphError("degenerate point set; try another seed")
    return MultiGraph.from_networkx(g)


def planar_plus_edges(
    n: int,
    extra: int,
    seed: int = 0,
    drop: float = 0.0,
    ears: int = 0,
    subdivisions: int = 0,
) -> tuple[MultiGraph, tuple[int, ...]]:
    """Random planar base plus ``extra`` new edges; returns the graph and their ids.

    The base may gain degree-2 vertices: ``ears`` new vertices joined to
    both ends of a random edge, and ``subdivisions`` vertices placed on
    random edges. Every degree-2 vertex receives one of the extra edges, so
    the result has minimum degree 3, and deleting the returned ids leaves
    the planar base.
    """
    if ears + subdivisions > 2 * extra:
        raise GraphError("each degree-2 vertex needs an extra edge")
    tri = random_planar(n, seed, drop)
    rng = random.Random(seed * 7919 + 17)
    pairs = sorted(tri.edges.values())
    nxt = max(tri.vertices) + 1
    low: list[int] = []
    for kind in ["ear"] * ears + ["sub"] * subdivisions:
        x, y = pairs[rng.randrange(len(pairs))]
        if kind == "sub":
            pairs.remove((x, y))
        pairs += [(x, nxt), (y, nxt)]
        low.append(nxt)
        nxt += 1
    present = set(pairs)
    verts = range(nxt)

    def fresh(u: int, pool) -> tuple[int, int] | None:
        options = [tuple(sorted((u, v))) for v in pool if v != u and tuple(sorted((u, v))) not in present]
        return rng.choice(options) if options else None

    added: list[tuple[int, int]] = []
    rng.shuffle(low)
    while low:
        u = low.pop()
        # sometimes pair two degree-2 vertices with a single edge
        pool = low if low and rng.random() < 0.5 else verts
        p = fresh(u, pool)
        if p is None:
            raise GraphError("cannot attach a degree-2 vertex")
        present.add(p)
        added.append(p)
        v = p[0] if p[1] == u else p[1]
        if v in low:
            low.remove(v)
    while len(added) < extra:
        p = fresh(rng.randrange(nxt), verts)
        if p is None:
            raise GraphError("not enough non-edges for the requested extras")
        present.add(p)
        added.append(p)
    if len(added) > extra:
        raise GraphError("degree-2 vertices need more extra edges than requested")
    base = MultiGraph.from_pairs(sorted(present - set(added)), verts)
    g = base
    ids = []
    for u, v in added:
        g, eid = g.add_edge(u, v)
        ids.append(eid)
    return MultiGraph(g.vertices, g.edges), tuple(ids)


def hub_instance(spokes: int, double: bool = False) -> tuple[MultiGraph, tuple[int, ...]]:
    """Instance whose removal step meets two adjacent hubs of high degree.

    Hubs x, y are adjacent and both joined to every vertex of a path of
    ``spokes`` vertices; vertex u sees only x and y in the planar part and
    the planarizing edge e joins u to the middle of the path, which destroys
    planarity. With
    ``double`` a second, disjoint copy is built and e joins the two
    u-vertices instead, so both ends of e get suppressed; a K5 component
    whose held-back edge is also planarizing keeps the instance non-planar.
    """

    def block(off: int) -> tuple[list[tuple[int, int]], int, int]:
        x, y, u = off, off + 1, off + 2
        path = list(range(off + 3, off + 3 + spokes))
        es = [(x, y), (x, u), (y, u)]
        es += [(x, r) for r in path] + [(y, r) for r in path]
        es += list(zip(path, path[1:]))
        return es, u, path[len(path) // 2]

    pairs, u1, mid1 = block(0)
    if not double:
        g = MultiGraph.from_pairs(pairs)
        g, eid = g.add_edge(u1, mid1)
        return MultiGraph(g.vertices, g.edges), (eid,)
    more, u2, _ = block(spokes + 3)
    # a K5 with one edge held back keeps H non-planar after e is gone
    k5 = list(itertools.combinations(range(2 * spokes + 6, 2 * spokes + 11), 2))
    g = MultiGraph.from_pairs(pairs + more + k5[1:])
    g, eid = g.add_edge(u1, u2)
    g, fid = g.add_edge(*k5[0])
    return MultiGraph(g.vertices, g.edges), (eid, fid)


def star_subdivision(per_side: int = 2) -> tuple[MultiGraph, tuple[int, ...]]:
    """Prism with one triangle subdivided and every subdivision vertex joined to a hub.

    The hub ``z = 6`` also sits in the other triangle's face. The hub
    edges form the returned planarizing set, a star, so its matching number
    is 1 while the cycle found through the subdivided triangle is long.
    """
    if per_side < 1:
        raise GraphError("need at least one subdivision vertex per side")
    z = 6
    pairs = [(3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5), (3, z), (4, z), (5, z)]
    nxt = 7
    subs: list[int] = []
    for a, b in ((0, 1), (1, 2), (2, 0)):
        chain = [a, *range(nxt, nxt + per_side), b]
        pairs += list(zip(chain, chain[1:]))
        subs += chain[1:-1]
        nxt += per_side
    g = MultiGraph.from_pairs(pairs)
    ids = []
    for v in subs:
        g, eid = g.add_edge(z, v)
        ids.append(eid)
    return MultiGraph(g.vertices, g.edges), tuple(ids)


def corpus_instance(seed: int) -> tuple[MultiGraph, tuple[int, ...]]:
    """One member of the fuzz corpus: planar base of 6..14 points plus up to 4 edges.

    Parameters cycle with the seed so that sizes, edge densities and the
    number of degree-2 attachments all vary across the corpus.
    """
    extra = seed % 5
    ears = (seed // 5) % 3 if extra else 0
    subs = (seed // 15) % 2 if extra else 0
    ears = min(ears, 2 * extra)
    subs = min(subs, 2 * extra - ears)
    return planar_plus_edges(6 + seed % 9, extra, seed, (seed % 3) * 0.25, ears, subs)


def corpus(size: int, start: int = 0) -> Iterator[tuple[int, MultiGraph, tuple[int, ...]]]:
    """The first ``size`` constructible corpus instances from seed ``start`` on."""
    made = 0
    seed = start
    while made < size:
        try:
            g, es = corpus_instance(seed)
        except GraphError:
            seed += 1
            continue
        yield seed, g, es
        made += 1
        seed += 1


def random_planar_plus_edges(n: int, extra: int, seed: int = 0) -> MultiGraph:
    return planar_plus_edges(n, extra, seed)[0]


FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
    "circulant": circulant,
    "random_gnm": random_gnm,
    "random_planar_plus_edges": random_planar_plus_edges,
}


def generate(family: str, **params) -> MultiGraph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None
