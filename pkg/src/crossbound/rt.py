"""Cycle finding with few hanging edges by induction on a planarizing set.

Given a simple graph ``H`` of minimum degree 3 and an edge set ``E`` with
``H - E`` planar, :func:`rt_find_cycle` returns a chordless cycle ``K`` with
special vertex such that ``h(K) <= |E| + 36``. Each induction step removes
one edge ``e = uw`` of ``E`` and derives a smaller instance ``H*`` (or stops
with a triangle); the cycle found for ``H*`` is then carried back to ``H``.
Every step is recorded in a :class:`ProcedureTrace` whose case labels follow
the usual numbering of the argument (1, 2.1.1 ... 2.3.2).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import GraphError, TheoremViolation
from .graph import (
    ApexCycle,
    MultiGraph,
    chords,
    cycle_from_vertices,
    hanging_count,
    lift_cycle,
    short_cycles,
    suppress_degree2,
)
from .planarity import PlanarizingSet, planar_fast

LEMMA0_LENGTH = 5
LEMMA0_HANGING = 36
TERMINAL_CASES = frozenset({"BASE-LEMMA0", "2.2.1", "2.2.2", "2.3.1"})
CASES = TERMINAL_CASES | {"1", "2.1.1", "2.1.2", "2.1.3", "2.2.3", "2.3.2"}


def _degree_key(g: MultiGraph, v: int) -> tuple[int, int]:
    return (-g.degree(v), v)


def lemma0_cycle(h: MultiGraph) -> ApexCycle:
    """Best cycle of length at most 5 in a simple planar graph of min degree 3.

    Minimizes ``h(K)`` over all such cycles and apex choices; ties go to the
    shorter cycle, then to the lexicographically smallest canonical form.
    """
    if not h.is_simple() or h.min_degree() < 3:
        raise GraphError("expected a simple graph of minimum degree 3")
    best = None
    for c in short_cycles(h, LEMMA0_LENGTH):
        apex = min(c.vertices, key=lambda v: _degree_key(h, v))
        c = c.with_apex(apex)
        key = (hanging_count(h, c), c.length, c.canonical().vertices)
        if best is None or key < best[0]:
            best = (key, c.canonical())
    if best is None:
        raise TheoremViolation("planar graph of min degree 3 without a cycle of length <= 5")
    cyc = best[1]
    if hanging_count(h, cyc) > LEMMA0_HANGING:
        raise TheoremViolation(f"shortest-cycle bound fails: h={hanging_count(h, cyc)}")
    if chords(h, cyc):
        raise TheoremViolation("minimum-h short cycle has a chord")
    return cyc


def apex_for_split(kstar: ApexCycle, sub: Iterable[int], g: MultiGraph) -> int:
    """Keep the old special vertex if it survives, else take a max-degree vertex."""
    sub = list(sub)
    if kstar.apex in sub:
        return kstar.apex
    return min(sub, key=lambda v: _degree_key(g, v))


def split_by_chord(c: ApexCycle, eid: int, g: MultiGraph) -> tuple[ApexCycle, ApexCycle]:
    """The two cycles formed by cycle ``c`` and its chord ``eid``."""
    u, w = g.endpoints(eid)
    vs, es = c.vertices, c.edges
    l = len(vs)
    i, j = vs.index(u), vs.index(w)
    if (j - i) % l in (1, l - 1):
        raise GraphError(f"edge {eid} joins consecutive cycle vertices")

    def arc(a: int, b: int) -> ApexCycle:
        n = (b - a) % l
        avs = tuple(vs[(a + s) % l] for s in range(n + 1))
        aes = tuple(es[(a + s) % l] for s in range(n)) + (eid,)
        apex = apex_for_split(c, avs, g)
        return ApexCycle(avs, aes, apex)

    return arc(i, j), arc(j, i)


def _best_split(c: ApexCycle, eid: int, g: MultiGraph, bound: int) -> ApexCycle:
    first, second = split_by_chord(c, eid, g)
    ranked = sorted(
        (first, second), key=lambda x: (hanging_count(g, x), x.length, x.canonical().vertices)
    )
    if hanging_count(g, ranked[0]) > bound:
        raise TheoremViolation("neither chord split satisfies the hanging-edge bound")
    return ranked[0]


# ---------------------------------------------------------------------------
# One induction step
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Descent:
    """Outcome of analysing ``(H, E)`` before recursing.

    ``kind`` is a terminal case label when ``cycle`` is set; otherwise one of
    ``"1"``, ``"2.1"``, ``"2.2.3"``, ``"2.3.2"`` with the child instance.
    ``guard`` lists vertices that may only appear on the child cycle as its
    special vertex (the merged high-degree endpoints).
    """

    kind: str
    edge: int | None
    child: MultiGraph | None = None
    child_eset: tuple[int, ...] = ()
    cycle: ApexCycle | None = None
    guard: tuple[int, ...] = ()


def _triangle(h: MultiGraph, mid: int, low: int, apex: int) -> ApexCycle:
    return cycle_from_vertices(h, (mid, low, apex), apex)


def _class_triangle(h: MultiGraph, mid: int, x: int, y: int, threshold: int) -> ApexCycle | None:
    """Triangle ``mid-x-y`` when one of x, y has degree at most ``threshold``.

    The special vertex is the higher-degree endpoint (smaller id on ties),
    so the low-degree one is counted in ``h``.
    """
    low = [q for q in (x, y) if h.degree(q) <= threshold]
    if not low:
        return None
    apex = min((x, y), key=lambda v: _degree_key(h, v)) if len(low) == 2 else (y if low[0] == x else x)
    other = x if apex == y else y
    return _triangle(h, mid, other, apex)


def descend(h: MultiGraph, eset: Iterable[int]) -> Descent:
    eset = tuple(sorted(set(eset)))
    if not eset or planar_fast(h):
        return Descent("BASE-LEMMA0", None, cycle=lemma0_cycle(h))
    t = len(eset)
    e = eset[0]
    u, w = h.endpoints(e)
    h1 = h.remove_edges([e])
    rest = eset[1:]
    low = [z for z in (u, w) if h1.degree(z) == 2]
    for v in h1.vertices:
        if v not in (u, w) and h1.degree(v) < 3:
            raise TheoremViolation(f"vertex {v} dropped below degree 3 after deleting {e}")
    if not low:
        return Descent("1", e, h1, rest)

    h2 = h1
    created: dict[int, int] = {}
    for z in sorted(low):
        new_id = h2.next_id
        h2 = suppress_degree2(h2, z)
        if not h2.has_edge(new_id):
            raise TheoremViolation(f"suppressing {z} did not create an edge")
        created[z] = new_id
    absorbed = {}
    for z, s in created.items():
        ea, _, eb = h2.origin[s]
        absorbed[ea] = s
        absorbed[eb] = s
    eset2 = tuple(sorted({f if h2.has_edge(f) else absorbed[f] for f in rest}))

    classes = h2.parallel_classes()
    if len(classes) > 2:
        raise TheoremViolation("suppression produced more than two parallel classes")
    if not classes:
        return Descent("2.1", e, h2, eset2)

    threshold = 37 + t
    by_edge = {s: z for z, s in created.items()}

    def analyse(cls: list[int]) -> tuple[int, int, int, int, list[int]]:
        x, y = h2.endpoints(cls[0])
        mids = [by_edge[s] for s in cls if s in by_edge]
        originals = [s for s in cls if s not in by_edge]
        return x, y, len(mids), (mids[0] if mids else -1), originals

    if len(classes) == 1:
        cls = classes[0]
        x, y, nmid, mid, originals = analyse(cls)
        if nmid == 2:
            return Descent("2.2.1", e, cycle=_triangle(h, u, x, w).with_apex(x))
        if nmid != 1 or len(originals) != 1:
            raise TheoremViolation("unexpected parallel class after suppression")
        tri = _class_triangle(h, mid, x, y, threshold)
        if tri is not None:
            return Descent("2.2.2", e, cycle=tri)
        merged = created[mid]
        child = h2.remove_edges([merged])
        child_eset = tuple(sorted({originals[0] if f == merged else f for f in eset2}))
        return Descent("2.2.3", e, child, child_eset, guard=(x, y))

    infos = [analyse(c) for c in classes]
    if any(nmid != 1 or len(orig) != 1 for _, _, nmid, _, orig in infos):
        raise TheoremViolation("two parallel classes must each hold one suppressed path")
    if {mid for _, _, _, mid, _ in infos} != {u, w}:
        raise TheoremViolation("parallel classes do not come from both endpoints of e")
    infos.sort(key=lambda i: i[3] != u)  # the class through u first
    candidates = [
        tri for x, y, _, mid, _ in infos if (tri := _class_triangle(h, mid, x, y, threshold)) is not None
    ]
    if candidates:
        best = min(candidates, key=lambda c: hanging_count(h, c))
        return Descent("2.3.1", e, cycle=best)
    child = h2
    child_eset = set(eset2)
    guard: list[int] = []
    for x, y, _, mid, orig in infos:
        merged = created[mid]
        child = child.remove_edges([merged])
        if merged in child_eset:
            child_eset.discard(merged)
            child_eset.add(orig[0])
        guard += [x, y]
    return Descent("2.3.2", e, child, tuple(sorted(child_eset)), guard=tuple(guard))


def ascend(h: MultiGraph, eset: Iterable[int], d: Descent, kstar: ApexCycle) -> tuple[ApexCycle, str]:
    """Carry the child's cycle back to ``h``; returns the cycle and final case label."""
    t = len(set(eset))
    bound = t + 36
    e = d.edge
    u, w = h.endpoints(e)
    if d.kind == "1":
        kstar.validate(h)
        if u in kstar and w in kstar:
            return _best_split(kstar, e, h, bound), "1"
        return kstar, "1"
    if d.kind == "2.1":
        lifted = lift_cycle(kstar, d.child, h)
        on = sum(1 for z in (u, w) if z in lifted)
        if on == 2:
            return _best_split(lifted, e, h, bound), "2.1.3"
        return lifted, ("2.1.1", "2.1.2")[on]
    if d.kind in ("2.2.3", "2.3.2"):
        present = [z for z in d.guard if z in kstar]
        if len(present) > 1 or (present and present[0] != kstar.apex):
            raise TheoremViolation(
                f"case {d.kind}: child cycle meets high-degree vertices {present} off its apex"
            )
        lifted = lift_cycle(kstar, d.child, h)
        if u in lifted and w in lifted:
            raise TheoremViolation(f"case {d.kind}: e became a chord")
        return lifted, d.kind
    raise GraphError(f"cannot ascend through case {d.kind!r}")


# ---------------------------------------------------------------------------
# Full procedure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RTStep:
    graph: MultiGraph
    eset: tuple[int, ...]
    edge: int | None
    case: str
    cycle: ApexCycle

    @property
    def t(self) -> int:
        return len(self.eset)


@dataclass(frozen=True)
class ProcedureTrace:
    steps: tuple[RTStep, ...]

    @property
    def graphs(self) -> list[MultiGraph]:
        return [s.graph for s in self.steps]

    @property
    def cycles(self) -> list[ApexCycle]:
        return [s.cycle for s in self.steps]

    @property
    def s(self) -> int:
        return len(self.steps) - 1

    def to_dict(self) -> dict:
        return {
            "steps": [
                {
                    "graph": st.graph.to_dict(),
                    "E": list(st.eset),
                    "e": st.edge,
                    "case": st.case,
                    "cycle": st.cycle.to_dict(),
                }
                for st in self.steps
            ]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> ProcedureTrace:
        return cls(
            tuple(
                RTStep(
                    MultiGraph.from_dict(st["graph"]),
                    tuple(st["E"]),
                    st["e"],
                    st["case"],
                    ApexCycle.from_dict(st["cycle"]),
                )
                for st in data["steps"]
            )
        )

    def to_text(self) -> str:
        lines = []
        for i, st in enumerate(self.steps):
            c = st.cycle
            lines.append(
                f"H_{i}: n={st.graph.n} m={st.graph.m} t={st.t} e={st.edge} case {st.case}"
                f" -> C_{i}={list(c.vertices)} apex={c.apex} l={c.length}"
                f" h={hanging_count(st.graph, c)}"
            )
        return "\n".join(lines) + "\n"


def _check_cycle(h: MultiGraph, c: ApexCycle, t: int) -> None:
    c.validate(h)
    if chords(h, c):
        raise TheoremViolation(f"cycle {c.vertices} has chords {sorted(chords(h, c))}")
    if hanging_count(h, c) > t + 36:
        raise TheoremViolation(f"h={hanging_count(h, c)} exceeds t+36={t + 36}")


def rt_find_cycle(h: MultiGraph, eset: PlanarizingSet | Iterable[int]) -> tuple[ApexCycle, ProcedureTrace]:
    """Chordless cycle with special vertex and ``h(K) <= |E| + 36``, plus its trace."""
    es = tuple(sorted(set(eset.edges if isinstance(eset, PlanarizingSet) else eset)))
    if not h.is_simple() or h.min_degree() < 3:
        raise GraphError("expected a simple graph of minimum degree 3")
    if not planar_fast(h.remove_edges(es)):
        raise GraphError("H - E is not planar")

    frames: list[tuple[MultiGraph, tuple[int, ...], Descent]] = []
    cur, cur_e = h, es
    while True:
        d = descend(cur, cur_e)
        frames.append((cur, cur_e, d))
        if d.cycle is not None:
            break
        cur, cur_e = d.child, d.child_eset

    g_last, e_last, d_last = frames[-1]
    cycle = d_last.cycle
    _check_cycle(g_last, cycle, len(e_last))
    steps = [RTStep(g_last, e_last, d_last.edge, d_last.kind, cycle)]
    for g_i, e_i, d_i in reversed(frames[:-1]):
        cycle, label = ascend(g_i, e_i, d_i, cycle)
        _check_cycle(g_i, cycle, len(e_i))
        steps.append(RTStep(g_i, e_i, d_i.edge, label, cycle))
    steps.reverse()
    return cycle, ProcedureTrace(tuple(steps))


@dataclass
class TraceReport:
    errors: list[tuple[int, str]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors


def validate_trace(tr: ProcedureTrace) -> TraceReport:
    """Re-execute each recorded step and re-check every intermediate bound."""
    report = TraceReport()
    steps = tr.steps
    if not steps:
        report.errors.append((0, "empty trace"))
        return report
    if tr.s > steps[0].t:
        report.errors.append((0, f"s={tr.s} exceeds t={steps[0].t}"))
    for i, st in enumerate(steps):
        try:
            if st.case not in CASES:
                raise GraphError(f"unknown case label {st.case!r}")
            d = descend(st.graph, st.eset)
            if d.edge != st.edge:
                raise GraphError(f"selected edge {st.edge}, expected {d.edge}")
            last = i == len(steps) - 1
            if d.cycle is not None:
                if not last:
                    raise GraphError(f"case {d.kind} terminates but the trace continues")
                if st.case != d.kind:
                    raise GraphError(f"case label {st.case}, expected {d.kind}")
                if st.cycle != d.cycle:
                    raise GraphError("terminal cycle differs from recomputation")
            else:
                if last:
                    raise GraphError("trace ends at a non-terminal step")
                nxt = steps[i + 1]
                if nxt.graph != d.child or nxt.eset != d.child_eset:
                    raise GraphError("next graph is not H* of this step")
                cycle, label = ascend(st.graph, st.eset, d, nxt.cycle)
                if label != st.case:
                    raise GraphError(f"case label {st.case}, expected {label}")
                if cycle != st.cycle:
                    raise GraphError("cycle differs from recomputation")
            _check_cycle(st.graph, st.cycle, st.t)
        except (GraphError, TheoremViolation) as exc:
            report.errors.append((i, str(exc)))
    return report
