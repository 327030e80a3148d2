"""Reading and writing graphs as edge lists or graph6."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .errors import GraphError
from .graph import MultiGraph

FORMATS = ("edgelist", "graph6")


def parse_edgelist(text: str) -> MultiGraph:
    """One ``u v`` pair per line; edge ids follow line order.

    Blank lines and ``#`` comments are skipped. A line holding a single
    integer declares an isolated vertex.
    """
    pairs: list[tuple[int, int]] = []
    verts: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if any(x < 0 for x in nums):
            raise GraphError(f"line {lineno}: vertex ids must be non-negative")
        if len(nums) == 1:
            verts.add(nums[0])
        elif len(nums) == 2:
            pairs.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v'")
    return MultiGraph.from_pairs(pairs, verts)


def format_edgelist(g: MultiGraph) -> str:
    lines = [f"{u} {v}" for _, (u, v) in sorted(g.edges.items())]
    touched = {x for uv in g.edges.values() for x in uv}
    lines += [str(v) for v in sorted(g.vertices - touched)]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> MultiGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphError(f"expected exactly one graph6 line, got {len(lines)}")
    data = lines[0]
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    try:
        g = nx.from_graph6_bytes(data.encode("ascii"))
    except (ValueError, UnicodeEncodeError) as exc:
        raise GraphError(f"bad graph6 data: {exc}") from None
    return MultiGraph.from_networkx(g)


def format_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise GraphError("graph6 holds only simple graphs")
    if g.vertices != frozenset(range(g.n)):
        raise GraphError("graph6 needs vertices 0..n-1")
    return nx.to_graph6_bytes(g.underlying_simple(), header=False).decode("ascii")


def parse(text: str, fmt: str = "edgelist") -> MultiGraph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise GraphError(f"unknown format {fmt!r}; choose from {FORMATS}")


def read_graph(path: str | Path, fmt: str = "edgelist") -> MultiGraph:
    return parse(Path(path).read_text(), fmt)
