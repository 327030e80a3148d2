"""Planarity testing, rotation systems, skewness and weighted planarizing sets."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

import networkx as nx

from .arith import compare_weighted, leq_with_sqrt, weighted_value
from .errors import GraphError, TheoremViolation
from .graph import MultiGraph, max_matching

log = logging.getLogger(__name__)

Dart = tuple[int, int]  # (edge id, tail vertex)


@dataclass(frozen=True)
class Embedding:
    """Rotation system: clockwise order of incident edge ids at each vertex.

    Loops are not represented.
    """

    graph: MultiGraph
    rotation: Mapping[int, tuple[int, ...]]

    def head(self, dart: Dart) -> int:
        return self.graph.other(dart[0], dart[1])

    def next_dart(self, dart: Dart) -> Dart:
        """Successor of ``dart`` along its face (the face lies to its left)."""
        eid, _ = dart
        b = self.head(dart)
        rot = self.rotation[b]
        i = rot.index(eid)
        return (rot[(i + 1) % len(rot)], b)

    def faces(self) -> list[list[Dart]]:
        seen: set[Dart] = set()
        faces = []
        for v in sorted(self.rotation):
            for eid in self.rotation[v]:
                start = (eid, v)
                if start in seen:
                    continue
                face = []
                d = start
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    d = self.next_dart(d)
                faces.append(face)
        return faces

    @property
    def face_count(self) -> int:
        """Faces of the plane drawing: traced faces, one shared outer face."""
        comps = self.graph.components()
        traced = len(self.faces())
        isolated = sum(1 for c in comps if len(c) == 1 and not self.rotation.get(next(iter(c))))
        return traced + isolated - (len(comps) - 1)

    def check(self) -> None:
        """Raise unless the rotation system is a valid genus-0 embedding."""
        g = self.graph
        for v in g.vertices:
            inc = sorted(e for e in g.incident(v) if g.endpoints(e)[0] != g.endpoints(e)[1])
            if sorted(self.rotation.get(v, ())) != inc:
                raise GraphError(f"rotation at {v} does not list its incident edges")
        loops = len(g.loops())
        v_, e_ = g.n, g.m - loops
        if v_ - e_ + self.face_count != 1 + len(g.components()):
            raise GraphError("rotation system violates Euler's formula")

    def to_networkx(self) -> nx.PlanarEmbedding:
        """Simple-graph ``PlanarEmbedding``; parallel copies keep their first id."""
        emb = nx.PlanarEmbedding()
        emb.add_nodes_from(sorted(self.rotation))
        for v, rot in self.rotation.items():
            prev = None
            seen = set()
            for eid in rot:
                w = self.graph.other(eid, v)
                if w in seen:
                    continue
                seen.add(w)
                if prev is None:
                    emb.add_half_edge(v, w)
                else:
                    emb.add_half_edge(v, w, ccw=prev)
                prev = w
        return emb


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Embedding | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.planar


def _rotation_from_nx(g: MultiGraph, emb: nx.PlanarEmbedding) -> dict[int, tuple[int, ...]]:
    rotation: dict[int, tuple[int, ...]] = {}
    for v in sorted(g.vertices):
        order: list[int] = []
        if v in emb:
            for w in emb.neighbors_cw_order(v):
                ids = g.edges_between(v, w)
                # nested parallel copies: mirror order at the two ends
                order.extend(ids if v < w else reversed(ids))
        rotation[v] = tuple(order)
    return rotation


def is_planar(g: MultiGraph, *, witness: bool = True) -> PlanarityResult:
    """Test planarity; return an embedding or a Kuratowski subgraph's edge ids."""
    simple = g.underlying_simple()
    ok, cert = nx.check_planarity(simple, counterexample=witness)
    if ok:
        return PlanarityResult(True, Embedding(g, _rotation_from_nx(g, cert)))
    wit: tuple[int, ...] = ()
    if witness:
        wit = tuple(sorted(g.edges_between(u, v)[0] for u, v in cert.edges()))
    return PlanarityResult(False, witness=wit)


def planar_fast(g: MultiGraph) -> bool:
    return nx.is_planar(g.underlying_simple())


def _euler_excess(g: MultiGraph) -> int:
    """Edges beyond 3n-6 in the underlying simple graph (0 if n < 3)."""
    simple = {uv for uv in g.edges.values() if uv[0] != uv[1]}
    used = {x for uv in simple for x in uv}
    n = len(used)
    if n < 3:
        return 0
    return max(0, len(simple) - (3 * n - 6))


# ---------------------------------------------------------------------------
# Planarizing sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarizingSet:
    """Edge set ``E`` with ``G - E`` planar; ``t = |E|`` and ``t'`` its matching number."""

    edges: tuple[int, ...]
    t_indep: int
    exact: bool = True
    optimal_k: int | None = None  # set when (t, t') minimizes sqrt(k)*t + t'

    @property
    def t(self) -> int:
        return len(self.edges)

    def f(self, k: int) -> float:
        return weighted_value(k, self.t, self.t_indep)

    @classmethod
    def of(cls, g: MultiGraph, edges, **kw) -> PlanarizingSet:
        es = tuple(sorted(set(edges)))
        return cls(es, len(max_matching(es, g)), **kw)

    def check(self, g: MultiGraph) -> None:
        if not planar_fast(g.remove_edges(self.edges)):
            raise GraphError("graph minus the planarizing set is not planar")
        if self.t_indep > self.t:
            raise GraphError("t' exceeds t")


@dataclass(frozen=True)
class SkewnessResult:
    value: int | None
    witness: PlanarizingSet | None
    exact: bool
    lower: int
    upper: int | None


def skewness(g: MultiGraph, budget: int = 8) -> SkewnessResult:
    """Minimum number of edges whose removal leaves ``g`` planar.

    Iterative deepening over the removal cost with Kuratowski branching:
    every planarizing set must meet each Kuratowski subgraph, so the search
    branches on the witness edges of the current non-planar remainder.
    Removing an adjacency with parallel copies costs all its copies.
    """
    lower = _euler_excess(g)
    if planar_fast(g):
        return SkewnessResult(0, PlanarizingSet((), 0), True, 0, 0)

    def classes_of(h: MultiGraph, wit: tuple[int, ...]) -> list[tuple[int, ...]]:
        out = []
        for e in wit:
            u, v = h.endpoints(e)
            out.append(tuple(h.edges_between(u, v)))
        return sorted(set(out))

    failed: set[frozenset[int]] = set()

    def search(h: MultiGraph, removed: frozenset[int], left: int) -> frozenset[int] | None:
        if removed in failed:
            return None
        res = is_planar(h)
        if res.planar:
            return removed
        if left <= 0 or _euler_excess(h) > left:
            failed.add(removed)
            return None
        for cls_ in classes_of(h, res.witness):
            if len(cls_) > left:
                continue
            found = search(h.remove_edges(cls_), removed | frozenset(cls_), left - len(cls_))
            if found is not None:
                return found
        failed.add(removed)
        return None

    for s in range(max(lower, 1), budget + 1):
        failed.clear()
        found = search(g, frozenset(), s)
        if found is not None:
            return SkewnessResult(s, PlanarizingSet.of(g, found), True, s, s)
        lower = s + 1
    return SkewnessResult(None, None, False, lower, None)


def planarizing_sets(g: MultiGraph, t: int) -> Iterator[tuple[int, ...]]:
    """All ``t``-subsets of edge ids whose removal leaves ``g`` planar, in lex order."""
    ids = g.edge_ids()
    n_ids = len(ids)

    def rec(i: int, chosen: list[int], h: MultiGraph) -> Iterator[tuple[int, ...]]:
        need = t - len(chosen)
        if need == 0:
            if planar_fast(h):
                yield tuple(chosen)
            return
        if n_ids - i < need or _euler_excess(h) > need:
            return
        chosen.append(ids[i])
        yield from rec(i + 1, chosen, h.remove_edges([ids[i]]))
        chosen.pop()
        yield from rec(i + 1, chosen, h)

    yield from rec(0, [], g)


MAX_EDGES = 24
MAX_SKEWNESS = 4


def optimal_planarizing_set(
    g: MultiGraph, k: int, *, max_edges: int = MAX_EDGES, max_skewness: int = MAX_SKEWNESS
) -> PlanarizingSet:
    """Planarizing set minimizing ``sqrt(k)*t + t'``.

    Ties go to the smaller ``t``, then to the lexicographically smallest
    edge id tuple. Sizes are scanned upward from the skewness and the scan
    stops once ``sqrt(k)*t`` alone reaches the incumbent. Beyond the size
    ceiling a skewness witness is returned with ``exact=False``.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    sk = skewness(g, budget=max_skewness)
    if not sk.exact:
        raise GraphError(f"skewness exceeds budget {max_skewness}")
    if sk.value == 0:
        return PlanarizingSet((), 0, optimal_k=k)
    if g.m > max_edges:
        log.warning("graph has %d edges > %d; returning inexact planarizing set", g.m, max_edges)
        return PlanarizingSet(sk.witness.edges, sk.witness.t_indep, exact=False)

    best: tuple[int, ...] | None = None
    best_val: tuple[int, int] | None = None
    t = sk.value
    while True:
        if best_val is not None and compare_weighted(k, (t, 1), best_val) >= 0:
            break
        for es in planarizing_sets(g, t):
            val = (t, len(max_matching(es, g)))
            if best_val is None or compare_weighted(k, val, best_val) < 0:
                best, best_val = es, val
        t += 1
        if t > g.m:
            break
    assert best is not None and best_val is not None
    return PlanarizingSet(best, best_val[1], optimal_k=k)


@dataclass(frozen=True)
class Lemma1Report:
    k: int
    k_prime: int
    t: int
    t_indep: int
    skewness_bounded: bool  # k' <= k
    size_bounded: bool  # t <= k' + sqrt(k)

    @property
    def ok(self) -> bool:
        return self.skewness_bounded and self.size_bounded


def verify_lemma1(g: MultiGraph, k: int, pset: PlanarizingSet | None = None, k_prime: int | None = None) -> Lemma1Report:
    """Check ``k' <= k`` and ``t <= k' + sqrt(k)`` for a k-crossing-critical ``g``."""
    if k_prime is None:
        sk = skewness(g)
        if not sk.exact:
            raise GraphError("skewness not resolved within budget")
        k_prime = sk.value
    if pset is None:
        pset = optimal_planarizing_set(g, k)
    report = Lemma1Report(
        k, k_prime, pset.t, pset.t_indep,
        skewness_bounded=k_prime <= k,
        size_bounded=leq_with_sqrt(pset.t - k_prime, 1, k),
    )
    if not report.ok:
        raise TheoremViolation(f"planarizing-set bounds fail: {report}")
    return report
