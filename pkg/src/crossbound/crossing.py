"""Exact crossing numbers by planarization search, and drawings as planarizations."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

import networkx as nx

from .errors import GraphError
from .graph import MultiGraph
from .planarity import Embedding, is_planar

log = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class Drawing:
    """A drawing of ``graph`` encoded as an embedded planarization.

    Each crossing is a dummy vertex of degree 4. ``edge_paths[e]`` lists
    the planarization vertices along original edge ``e`` from its smaller
    endpoint to its larger one, and ``segments[e]`` the planarization edge
    ids in the same order.
    """

    graph: MultiGraph
    planarization: MultiGraph
    rotation: Mapping[int, tuple[int, ...]]
    dummies: frozenset[int]
    edge_paths: Mapping[int, tuple[int, ...]]
    segments: Mapping[int, tuple[int, ...]]

    @property
    def crossing_count(self) -> int:
        return len(self.dummies)

    @property
    def embedding(self) -> Embedding:
        return Embedding(self.planarization, self.rotation)

    def owner(self) -> dict[int, int]:
        return {s: e for e, segs in self.segments.items() for s in segs}

    def crossings(self) -> dict[int, Pair]:
        """Dummy vertex -> the two original edges crossing there."""
        own = self.owner()
        out = {}
        for x in sorted(self.dummies):
            es = sorted({own[s] for s in self.rotation[x]})
            out[x] = (es[0], es[-1])
        return out

    def validate(self) -> None:
        """Raise ``GraphError`` unless every drawing invariant holds."""
        p = self.planarization
        own = self.owner()
        if set(own) != set(p.edges):
            raise GraphError("segments do not partition the planarization edges")
        if set(self.segments) != set(self.graph.edges):
            raise GraphError("edge path map does not cover the original edges")
        for e, path in self.edge_paths.items():
            u, v = self.graph.endpoints(e)
            segs = self.segments[e]
            if path[0] != u or path[-1] != v or len(segs) != len(path) - 1:
                raise GraphError(f"path of edge {e} has wrong ends")
            for i, s in enumerate(segs):
                if p.endpoints(s) != tuple(sorted((path[i], path[i + 1]))):
                    raise GraphError(f"segment {s} of edge {e} is misplaced")
            if any(x not in self.dummies for x in path[1:-1]):
                raise GraphError(f"edge {e} passes through an original vertex")
        originals = p.vertices - self.dummies
        if originals != self.graph.vertices:
            raise GraphError("original vertex set changed")
        for x in self.dummies:
            rot = self.rotation[x]
            if len(rot) != 4:
                raise GraphError(f"dummy {x} has degree {len(rot)}")
            a, b, c, d = (own[s] for s in rot)
            if not (a == c and b == d and a != b):
                raise GraphError(f"dummy {x} does not alternate two edges")
        self.embedding.check()

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "planarization": self.planarization.to_dict(),
            "rotation": {str(v): list(r) for v, r in sorted(self.rotation.items())},
            "dummies": sorted(self.dummies),
            "edge_paths": {str(e): list(p) for e, p in sorted(self.edge_paths.items())},
            "segments": {str(e): list(s) for e, s in sorted(self.segments.items())},
            "crossings": self.crossing_count,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Drawing:
        return cls(
            MultiGraph.from_dict(data["graph"]),
            MultiGraph.from_dict(data["planarization"]),
            {int(v): tuple(r) for v, r in data["rotation"].items()},
            frozenset(data["dummies"]),
            {int(e): tuple(p) for e, p in data["edge_paths"].items()},
            {int(e): tuple(s) for e, s in data["segments"].items()},
        )

    def to_text(self) -> str:
        p = self.planarization
        lines = [f"# drawing n={self.graph.n} m={self.graph.m} crossings={self.crossing_count}"]
        for v in sorted(p.vertices):
            kind = "dummy" if v in self.dummies else "vertex"
            lines.append(f"{kind} {v} rotation {' '.join(map(str, self.rotation[v]))}")
        for e in sorted(self.edge_paths):
            u, v = self.graph.endpoints(e)
            path = " ".join(map(str, self.edge_paths[e]))
            segs = " ".join(map(str, self.segments[e]))
            lines.append(f"edge {e} {u} {v} path {path} segments {segs}")
        return "\n".join(lines) + "\n"


def build_drawing(
    g: MultiGraph,
    pairs: Sequence[Pair] = (),
    orders: Mapping[int, Sequence[int]] | None = None,
) -> Drawing | None:
    """Planarize ``g`` with the given crossings, or return None if not realizable.

    ``pairs[j]`` is the j-th crossing; ``orders[e]`` lists the indices of
    the crossings on edge ``e`` from its smaller endpoint to its larger one
    (defaults to increasing index).
    """
    orders = dict(orders or {})
    per_edge: dict[int, list[int]] = {}
    for j, (a, b) in enumerate(pairs):
        per_edge.setdefault(a, []).append(j)
        per_edge.setdefault(b, []).append(j)
    base = max(g.vertices, default=-1) + 1
    edges: dict[int, tuple[int, int]] = {}
    paths: dict[int, tuple[int, ...]] = {}
    segments: dict[int, tuple[int, ...]] = {}
    sid = 0
    for e in g.edge_ids():
        u, v = g.endpoints(e)
        order = list(orders.get(e, per_edge.get(e, [])))
        if sorted(order) != sorted(per_edge.get(e, [])):
            raise GraphError(f"order for edge {e} does not match its crossings")
        path = (u, *(base + j for j in order), v)
        segs = []
        for a, b in zip(path, path[1:]):
            edges[sid] = (a, b)
            segs.append(sid)
            sid += 1
        paths[e] = path
        segments[e] = tuple(segs)
    dummies = frozenset(base + j for j in range(len(pairs)))
    p = MultiGraph(g.vertices | dummies, edges)
    rotation = _crossing_rotation(p, dummies, paths, segments)
    if rotation is None:
        return None
    return Drawing(g, p, rotation, dummies, paths, segments)


def _crossing_rotation(
    p: MultiGraph,
    dummies: frozenset[int],
    paths: Mapping[int, tuple[int, ...]],
    segments: Mapping[int, tuple[int, ...]],
) -> dict[int, tuple[int, ...]] | None:
    """Embed ``p`` so that the two edges through each dummy really cross.

    Plain planarity would also accept two edges that merely touch at a
    dummy. Each dummy is therefore blown up into a wheel whose rim carries
    the four segments in alternating order; a wheel embeds uniquely up to
    reflection, so any embedding of the blown-up graph contracts back to
    one in which every dummy alternates.
    """
    at: dict[int, list[tuple[int, int]]] = {x: [] for x in dummies}  # (in, out) per edge
    for e, path in paths.items():
        segs = segments[e]
        for i in range(1, len(path) - 1):
            at[path[i]].append((segs[i - 1], segs[i]))
    edges = dict(p.edges)
    first_rim = next_v = max(p.vertices, default=-1) + 1
    next_s = max(edges, default=-1) + 1
    rim_segment: dict[int, int] = {}  # spoke id -> segment at its rim vertex
    for x in sorted(dummies):
        (a_in, a_out), (b_in, b_out) = at[x]
        rim = list(range(next_v, next_v + 4))
        next_v += 4
        for r, seg in zip(rim, (a_in, b_in, a_out, b_out)):
            u, v = edges[seg]
            edges[seg] = (r, v) if u == x else (u, r)
            edges[next_s] = (x, r)
            rim_segment[next_s] = seg
            next_s += 1
        for i in range(4):
            edges[next_s] = (rim[i], rim[(i + 1) % 4])
            next_s += 1
    blown = MultiGraph(p.vertices | set(range(first_rim, next_v)), edges)
    res = is_planar(blown, witness=False)
    if not res.planar:
        return None
    rot = res.embedding.rotation
    out = {v: rot[v] for v in p.vertices if v not in dummies}
    for x in dummies:
        out[x] = tuple(rim_segment[s] for s in rot[x])
    return out


def planar_drawing(g: MultiGraph) -> Drawing:
    d = build_drawing(g)
    if d is None:
        raise GraphError("graph is not planar")
    return d


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingResult:
    value: int | None
    drawing: Drawing | None
    exact: bool
    lower: int
    upper: int | None


class _Search:
    """Shared enumeration of crossing configurations in a fixed total order.

    Configurations are ordered by crossing count, then lexicographically by
    the sorted tuple of crossing pair indices, then by the per-edge crossing
    orders (edges by id, permutations in lex order). The first realizable
    configuration is the returned witness, so pruning that only discards
    unrealizable configurations cannot change the answer.
    """

    def __init__(self, g: MultiGraph) -> None:
        if g.loops():
            raise GraphError("crossing search needs a loopless graph")
        self.g = g
        ids = g.edge_ids()
        self.ends = {e: g.endpoints(e) for e in ids}
        self.pairs: list[Pair] = [
            (a, b)
            for a, b in itertools.combinations(ids, 2)
            if not set(self.ends[a]) & set(self.ends[b])
        ]
        self.base = max(g.vertices, default=-1) + 1
        self.simple = g.underlying_simple()
        self.n_used = sum(1 for v in g.vertices if g.degree(v) > 0)
        self.class_size = {}
        for e, uv in self.ends.items():
            self.class_size[uv] = self.class_size.get(uv, 0) + 1

    def euler_excess(self, removed: Iterable[int]) -> int:
        """Lower bound on further removals needed after deleting ``removed``."""
        count: dict[tuple[int, int], int] = {}
        for e in set(removed):
            uv = self.ends[e]
            count[uv] = count.get(uv, 0) + 1
        gone = sum(1 for uv, c in count.items() if c == self.class_size[uv])
        n = self.n_used
        if n < 3:
            return 0
        return self.simple.number_of_edges() - gone - (3 * n - 6)

    def orderings(self, combo: Sequence[int]) -> Iterator[dict[int, tuple[int, ...]]]:
        per_edge: dict[int, list[int]] = {}
        for j, pi in enumerate(combo):
            a, b = self.pairs[pi]
            per_edge.setdefault(a, []).append(j)
            per_edge.setdefault(b, []).append(j)
        multi = sorted(e for e, js in per_edge.items() if len(js) > 1)
        base = {e: tuple(js) for e, js in per_edge.items()}
        for perms in itertools.product(*(itertools.permutations(per_edge[e]) for e in multi)):
            order = dict(base)
            order.update(zip(multi, perms))
            yield order

    def realizable(self, combo: Sequence[int], order: Mapping[int, Sequence[int]]) -> bool:
        h = nx.Graph()
        h.add_nodes_from(self.g.vertices)
        for e, (u, v) in self.ends.items():
            path = (u, *(self.base + j for j in order.get(e, ())), v)
            h.add_edges_from(zip(path, path[1:]))
        return nx.is_planar(h)

    def transversal_ok(self, combo: Sequence[int]) -> bool:
        for pick in (0, 1):
            t = {self.pairs[pi][pick] for pi in combo}
            h = self.simple.copy()
            for e in t:
                u, v = self.ends[e]
                if h.has_edge(u, v) and all(x in t for x in self.g.edges_between(u, v)):
                    h.remove_edge(u, v)
            if not nx.is_planar(h):
                return False
        return True

    def combos(self, c: int, prune: bool) -> Iterator[tuple[int, ...]]:
        if not prune:
            yield from itertools.combinations(range(len(self.pairs)), c)
            return
        chosen: list[int] = []

        def rec(start: int) -> Iterator[tuple[int, ...]]:
            left = c - len(chosen)
            if left == 0:
                combo = tuple(chosen)
                if self.transversal_ok(combo):
                    yield combo
                return
            removed = [self.pairs[pi][0] for pi in chosen]
            if self.euler_excess(removed) > left:
                return
            for pi in range(start, len(self.pairs) - left + 1):
                chosen.append(pi)
                yield from rec(pi + 1)
                chosen.pop()

        yield from rec(0)

    def run(self, upper: int, prune: bool) -> CrossingResult:
        start = max(0, self.euler_excess(())) if prune else 0
        for c in range(start, upper + 1):
            for combo in self.combos(c, prune):
                for order in self.orderings(combo):
                    if self.realizable(combo, order):
                        pairs = [self.pairs[pi] for pi in combo]
                        d = build_drawing(self.g, pairs, order)
                        assert d is not None
                        return CrossingResult(c, d, True, c, c)
        return CrossingResult(None, None, False, max(start, upper + 1), None)


DEFAULT_UPPER = 4


def crossing_number(g: MultiGraph, upper: int = DEFAULT_UPPER) -> CrossingResult:
    """Exact crossing number with an optimal drawing, searched up to ``upper``.

    Incident edges never cross and each pair of edges crosses at most once.
    When no drawing with at most ``upper`` crossings exists the result is
    inexact with ``lower = upper + 1``.
    """
    return _Search(g).run(upper, prune=True)


NAIVE_MAX_EDGES = 12
NAIVE_MAX_CROSSINGS = 3


def crossing_number_naive(g: MultiGraph, upper: int = NAIVE_MAX_CROSSINGS) -> int | None:
    """Unpruned enumeration; the independent oracle for ``crossing_number``."""
    if g.m > NAIVE_MAX_EDGES and upper > NAIVE_MAX_CROSSINGS:
        raise GraphError(
            f"naive search limited to {NAIVE_MAX_EDGES} edges or {NAIVE_MAX_CROSSINGS} crossings"
        )
    return _Search(g).run(upper, prune=False).value


@dataclass(frozen=True)
class CriticalityCertificate:
    k: int
    cr: int | None
    deletions: Mapping[int, int | None] = field(default_factory=dict)
    critical: bool | None = None

    @property
    def exact(self) -> bool:
        return self.critical is not None

    @property
    def max_deletion(self) -> int | None:
        vals = list(self.deletions.values())
        if not vals or any(v is None for v in vals):
            return None
        return max(vals)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "cr": self.cr,
            "max_deletion_cr": self.max_deletion,
            "deletions": {str(e): v for e, v in sorted(self.deletions.items())},
            "critical": self.critical,
        }


def is_k_crossing_critical(g: MultiGraph, k: int, budget: int = DEFAULT_UPPER) -> CriticalityCertificate:
    """Decide whether ``cr(g) >= k`` while ``cr(g - e) < k`` for every edge.

    Both halves only need searches up to ``k - 1`` crossings, so the verdict
    is always definite. ``cr`` itself is reported exactly when it is at most
    ``max(budget, k)``, otherwise as None; a deletion is None when
    ``cr(g - e) >= k``.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    full = crossing_number(g, max(budget, k))
    if full.exact and full.value < k:
        return CriticalityCertificate(k, full.value, {}, False)
    deletions = {e: crossing_number(g.remove_edges([e]), k - 1).value for e in g.edge_ids()}
    critical = all(v is not None for v in deletions.values())
    return CriticalityCertificate(k, full.value, deletions, critical)


def crossings_on_path(d: Drawing, path: Iterable[int]) -> int:
    """Distinct crossings lying on the given original edges."""
    hit: set[int] = set()
    for e in path:
        if e not in d.edge_paths:
            raise GraphError(f"unknown edge {e}")
        hit.update(x for x in d.edge_paths[e][1:-1])
    return len(hit)
