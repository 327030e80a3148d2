"""Multigraphs with stable edge ids, structural reductions, and apex cycles."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

import networkx as nx

from .errors import GraphError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class MultiGraph:
    """Immutable undirected multigraph.

    Edges carry integer ids that never change and are never reused inside
    one lineage of derived graphs (``next_id`` only grows). Edges created by
    suppressing a degree-2 vertex remember the path they replaced in
    ``origin`` as ``(edge_a, middle_vertex, edge_b)``.
    """

    __slots__ = ("_vertices", "_edges", "_origin", "_next_id", "_inc")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Mapping[int, Edge] | None = None,
        origin: Mapping[int, tuple[int, int, int]] | None = None,
        next_id: int | None = None,
    ) -> None:
        edges = dict(edges or {})
        verts = set(vertices)
        norm: dict[int, Edge] = {}
        for eid in sorted(edges):
            u, v = edges[eid]
            verts.add(u)
            verts.add(v)
            norm[eid] = _norm(u, v)
        self._vertices = frozenset(verts)
        self._edges = norm
        self._origin = dict(origin or {})
        top = max(norm, default=-1) + 1
        self._next_id = max(top, next_id if next_id is not None else 0)
        inc: dict[int, list[int]] = {v: [] for v in verts}
        for eid, (u, v) in norm.items():
            inc[u].append(eid)
            inc[v].append(eid)
        self._inc = inc

    @classmethod
    def from_pairs(cls, pairs: Iterable[Edge], vertices: Iterable[int] = ()) -> MultiGraph:
        """Build a graph whose i-th pair becomes edge id i."""
        return cls(vertices, dict(enumerate(tuple(p) for p in pairs)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> MultiGraph:
        pairs = sorted(_norm(int(u), int(v)) for u, v in g.edges())
        return cls.from_pairs(pairs, (int(v) for v in g.nodes()))

    # -- basic access ---------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, Edge]:
        return MappingProxyType(self._edges)

    @property
    def origin(self) -> Mapping[int, tuple[int, int, int]]:
        return MappingProxyType(self._origin)

    @property
    def next_id(self) -> int:
        return self._next_id

    def edge_ids(self) -> list[int]:
        return sorted(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def endpoints(self, eid: int) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid}") from None

    def other(self, eid: int, v: int) -> int:
        a, b = self.endpoints(eid)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {eid}")

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    def _check_vertex(self, v: int) -> None:
        if v not in self._vertices:
            raise GraphError(f"unknown vertex {v}")

    def incident(self, v: int) -> list[int]:
        """Incident edge ids; a loop is listed twice."""
        self._check_vertex(v)
        return list(self._inc[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._inc[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted({self.other(e, v) for e in self._inc[v] if self._edges[e] != (v, v)})

    def edges_between(self, u: int, v: int) -> list[int]:
        self._check_vertex(u)
        key = _norm(u, v)
        return sorted({e for e in self._inc[u] if self._edges[e] == key})

    def loops(self) -> list[int]:
        return [e for e, (u, v) in sorted(self._edges.items()) if u == v]

    def parallel_classes(self) -> list[list[int]]:
        """Groups of two or more non-loop edges sharing both endpoints."""
        groups: dict[Edge, list[int]] = {}
        for eid, (u, v) in sorted(self._edges.items()):
            if u != v:
                groups.setdefault((u, v), []).append(eid)
        return [ids for _, ids in sorted(groups.items()) if len(ids) > 1]

    def is_simple(self) -> bool:
        return not self.loops() and not self.parallel_classes()

    def min_degree(self) -> int:
        return min((len(self._inc[v]) for v in self._vertices), default=0)

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for s in sorted(self._vertices):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for e in self._inc[x]:
                    y = self.other(e, x)
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    # -- derivation -----------------------------------------------------

    def _derive(self, vertices, edges, origin=None) -> MultiGraph:
        return MultiGraph(vertices, edges, self._origin if origin is None else origin, self._next_id)

    def remove_edges(self, ids: Iterable[int]) -> MultiGraph:
        drop = set(ids)
        for e in drop:
            self.endpoints(e)
        edges = {e: uv for e, uv in self._edges.items() if e not in drop}
        return self._derive(self._vertices, edges)

    def remove_vertices(self, vs: Iterable[int]) -> MultiGraph:
        drop = set(vs)
        for v in drop:
            self._check_vertex(v)
        edges = {e: (u, v) for e, (u, v) in self._edges.items() if u not in drop and v not in drop}
        return self._derive(self._vertices - drop, edges)

    def add_edge(self, u: int, v: int, origin: tuple[int, int, int] | None = None) -> tuple[MultiGraph, int]:
        """Return the new graph and the id given to the added edge."""
        eid = self._next_id
        edges = dict(self._edges)
        edges[eid] = _norm(u, v)
        orig = dict(self._origin)
        if origin is not None:
            orig[eid] = origin
        g = MultiGraph(self._vertices | {u, v}, edges, orig, eid + 1)
        return g, eid

    def underlying_simple(self) -> nx.Graph:
        """networkx Graph with loops dropped and parallel classes collapsed."""
        g = nx.Graph()
        g.add_nodes_from(sorted(self._vertices))
        g.add_edges_from(uv for uv in self._edges.values() if uv[0] != uv[1])
        return g

    # -- comparison / serialization ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self._vertices),
            "edges": [[e, u, v] for e, (u, v) in sorted(self._edges.items())],
            "origin": [[e, *o] for e, o in sorted(self._origin.items())],
            "next_id": self._next_id,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> MultiGraph:
        edges = {int(e): (int(u), int(v)) for e, u, v in data["edges"]}
        origin = {int(r[0]): (int(r[1]), int(r[2]), int(r[3])) for r in data.get("origin", [])}
        return cls(data["vertices"], edges, origin, data.get("next_id"))


def degree(g: MultiGraph, v: int) -> int:
    return g.degree(v)


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------


def suppress_degree2(g: MultiGraph, v: int) -> MultiGraph:
    """Remove degree-2 vertex ``v`` and join its two neighbours by a new edge.

    If both edges at ``v`` lead to the same neighbour the vertex is dropped
    together with its edges instead, since suppression would only create a
    loop.
    """
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, expected 2")
    e1, e2 = sorted(g.incident(v))
    if e1 == e2:
        raise GraphError(f"vertex {v} lies on a loop")
    x, y = g.other(e1, v), g.other(e2, v)
    if x == y:
        return g.remove_vertices([v])
    h = g.remove_vertices([v])
    # orient the recorded path from the smaller endpoint
    path = (e1, v, e2) if x <= y else (e2, v, e1)
    h, _ = h.add_edge(x, y, origin=path)
    return h


@dataclass(frozen=True)
class ReductionEvent:
    kind: str  # "loop" | "isolated" | "degree1" | "suppress"
    vertex: int | None = None
    edges: tuple[int, ...] = ()
    new_edge: int | None = None


@dataclass(frozen=True)
class ReductionTrace:
    events: tuple[ReductionEvent, ...] = ()
    parallel: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class EarlyBound:
    """A parallel pair survived reduction, so cr(G) <= 2k - 2 outright."""

    bound: int
    parallel: tuple[int, ...]
    graph: MultiGraph
    trace: ReductionTrace


def _apply(g: MultiGraph, ev: ReductionEvent) -> MultiGraph:
    if ev.kind == "loop":
        return g.remove_edges(ev.edges)
    if ev.kind in ("isolated", "degree1"):
        return g.remove_vertices([ev.vertex])
    if ev.kind == "suppress":
        return suppress_degree2(g, ev.vertex)
    raise GraphError(f"unknown reduction event {ev.kind!r}")


def replay(g: MultiGraph, trace: ReductionTrace) -> MultiGraph:
    for ev in trace.events:
        g = _apply(g, ev)
    return g


def _next_event(g: MultiGraph) -> ReductionEvent | None:
    loops = g.loops()
    if loops:
        return ReductionEvent("loop", edges=(loops[0],))
    for v in sorted(g.vertices):
        d = g.degree(v)
        if d == 0:
            return ReductionEvent("isolated", vertex=v)
        if d == 1:
            return ReductionEvent("degree1", vertex=v, edges=tuple(g.incident(v)))
        if d == 2:
            inc = tuple(sorted(g.incident(v)))
            return ReductionEvent("suppress", vertex=v, edges=inc, new_edge=g.next_id)
    return None


def preprocess_critical(g: MultiGraph, k: int) -> tuple[MultiGraph, ReductionTrace] | EarlyBound:
    """Reduce a claimed k-crossing-critical graph to a simple one of min degree 3.

    Loops, isolated vertices and degree-1 vertices are deleted and degree-2
    vertices suppressed (ascending vertex id) until nothing changes. A
    surviving parallel pair short-circuits to an ``EarlyBound``.
    """
    events: list[ReductionEvent] = []
    while (ev := _next_event(g)) is not None:
        g = _apply(g, ev)
        events.append(ev)
    if g.n == 0:
        raise GraphError("reduction left an empty graph")
    classes = g.parallel_classes()
    trace = ReductionTrace(tuple(events))
    if classes:
        pair = tuple(classes[0][:2])
        return EarlyBound(2 * k - 2, pair, g, ReductionTrace(tuple(events), pair))
    return g, trace


# ---------------------------------------------------------------------------
# Cycles with a special vertex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ApexCycle:
    """A cycle given by its vertex sequence and connecting edge ids.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % len]``.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    apex: int

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) or len(self.vertices) < 2:
            raise GraphError("cycle needs matching vertex and edge sequences")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("cycle vertices must be distinct")
        if self.apex not in self.vertices:
            raise GraphError(f"apex {self.apex} is not on the cycle")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def with_apex(self, apex: int) -> ApexCycle:
        return ApexCycle(self.vertices, self.edges, apex)

    def rotated(self, start: int) -> ApexCycle:
        """Same cycle with the vertex sequence starting at ``start``."""
        i = self.vertices.index(start)
        return ApexCycle(self.vertices[i:] + self.vertices[:i], self.edges[i:] + self.edges[:i], self.apex)

    def reversed(self) -> ApexCycle:
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        es = tuple(reversed(self.edges))
        return ApexCycle(vs, es, self.apex)

    def canonical(self) -> ApexCycle:
        c = self.rotated(min(self.vertices))
        r = c.reversed()
        return min(c, r, key=lambda x: (x.vertices, x.edges))

    def key(self) -> tuple:
        c = self.canonical()
        return (c.vertices, c.edges, c.apex)

    def validate(self, g: MultiGraph) -> None:
        l = len(self.vertices)
        for i, eid in enumerate(self.edges):
            a, b = self.vertices[i], self.vertices[(i + 1) % l]
            if not g.has_edge(eid) or g.endpoints(eid) != _norm(a, b):
                raise GraphError(f"edge {eid} does not join {a} and {b}")
        if len(set(self.edges)) != l:
            raise GraphError("cycle repeats an edge")

    def path_without(self, eid: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Vertex and edge sequence of the path left after deleting one cycle edge.

        The path starts at the endpoint of ``eid`` that comes later in the
        cycle order, so for ``eid = edges[i]`` it runs from
        ``vertices[i+1]`` all the way round to ``vertices[i]``.
        """
        i = self.edges.index(eid)
        l = len(self.edges)
        vs = tuple(self.vertices[(i + 1 + j) % l] for j in range(l))
        es = tuple(self.edges[(i + 1 + j) % l] for j in range(l - 1))
        return vs, es

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges), "apex": self.apex}

    @classmethod
    def from_dict(cls, data: Mapping) -> ApexCycle:
        return cls(tuple(data["vertices"]), tuple(data["edges"]), data["apex"])


def hanging_count(g: MultiGraph, c: ApexCycle) -> int:
    """Sum of ``degree - 2`` over the non-apex cycle vertices."""
    c.validate(g)
    return sum(g.degree(u) - 2 for u in c.vertices if u != c.apex)


def hanging_edges(g: MultiGraph, c: ApexCycle, v: int) -> list[int]:
    """Edges at cycle vertex ``v`` that are not cycle edges (chords included)."""
    own = c.edge_set()
    return sorted(e for e in g.incident(v) if e not in own)


def chords(g: MultiGraph, c: ApexCycle) -> frozenset[int]:
    """Non-cycle, non-loop edges with both endpoints on the cycle."""
    on = set(c.vertices)
    own = c.edge_set()
    return frozenset(
        e for e, (u, v) in g.edges.items() if e not in own and u != v and u in on and v in on
    )


def max_matching(edges: Iterable[int], g: MultiGraph) -> list[int]:
    """A maximum set of pairwise independent edges among ``edges``."""
    h = nx.Graph()
    by_pair: dict[Edge, int] = {}
    for e in sorted(set(edges)):
        u, v = g.endpoints(e)
        if u == v:
            continue
        by_pair.setdefault((u, v), e)
        h.add_edge(u, v)
    matching = nx.max_weight_matching(h, maxcardinality=True)
    return sorted(by_pair[_norm(u, v)] for u, v in matching)


def max_independent_edges(edges: Iterable[int], g: MultiGraph) -> int:
    return len(max_matching(edges, g))


def lift_cycle(c: ApexCycle, child: MultiGraph, parent: MultiGraph) -> ApexCycle:
    """Map a cycle of a derived graph back into ``parent``.

    Edges absent from ``parent`` are expanded through ``child.origin`` into
    the two-edge paths they replaced.
    """
    vs: list[int] = []
    es: list[int] = []
    l = len(c.edges)

    def expand(eid: int, a: int, b: int) -> None:
        if parent.has_edge(eid):
            vs.append(a)
            es.append(eid)
            return
        try:
            ea, mid, eb = child.origin[eid]
        except KeyError:
            raise GraphError(f"edge {eid} has no recorded origin") from None
        # origin is oriented from the smaller endpoint
        if a > b:
            ea, eb = eb, ea
        expand(ea, a, mid)
        expand(eb, mid, b)

    for i, eid in enumerate(c.edges):
        expand(eid, c.vertices[i], c.vertices[(i + 1) % l])
    lifted = ApexCycle(tuple(vs), tuple(es), c.apex)
    lifted.validate(parent)
    return lifted


def short_cycles(g: MultiGraph, max_len: int) -> Iterator[ApexCycle]:
    """Every simple cycle of length 3..max_len in a simple graph, once each.

    Cycles are yielded with apex set to their first (smallest) vertex.
    """
    adj = {v: g.neighbors(v) for v in g.vertices}
    for s in sorted(g.vertices):
        path = [s]
        on_path = {s}

        def extend() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            for w in adj[last]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        for vs in extend():
            es = tuple(
                g.edges_between(vs[i], vs[(i + 1) % len(vs)])[0] for i in range(len(vs))
            )
            yield ApexCycle(vs, es, s)


def cycle_from_vertices(g: MultiGraph, vs: Iterable[int], apex: int) -> ApexCycle:
    vs = tuple(vs)
    es = []
    for a, b in zip(vs, vs[1:] + vs[:1]):
        between = g.edges_between(a, b)
        if not between:
            raise GraphError(f"no edge between {a} and {b}")
        es.append(between[0])
    return ApexCycle(vs, tuple(es), apex)
