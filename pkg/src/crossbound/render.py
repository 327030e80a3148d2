"""SVG output for drawings, using a straight-line layout of the planarization."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .crossing import Drawing

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
)
SIZE = 480
MARGIN = 24


def layout(d: Drawing) -> dict[int, tuple[float, float]]:
    """Straight-line positions for every planarization vertex, scaled to the canvas."""
    emb = d.embedding.to_networkx()
    if emb.number_of_nodes() >= 3:
        raw = nx.combinatorial_embedding_to_pos(emb)
    else:
        raw = {v: (i, 0) for i, v in enumerate(sorted(emb.nodes))}
    xs = [p[0] for p in raw.values()] or [0]
    ys = [p[1] for p in raw.values()] or [0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (SIZE - 2 * MARGIN) / span
    return {
        v: (MARGIN + (x - min(xs)) * scale, SIZE - MARGIN - (y - min(ys)) * scale)
        for v, (x, y) in raw.items()
    }


def svg_text(d: Drawing) -> str:
    pos = layout(d)
    p = d.planarization
    own = d.owner()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>drawing with {d.crossing_count} crossings</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for s in sorted(p.edges):
        a, b = p.endpoints(s)
        (x1, y1), (x2, y2) = pos[a], pos[b]
        colour = PALETTE[own[s] % len(PALETTE)]
        out.append(
            f'<line class="edge" data-edge="{own[s]}" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="{colour}" stroke-width="2"/>'
        )
    for v in sorted(p.vertices):
        x, y = pos[v]
        if v in d.dummies:
            r = 5
            out.append(
                f'<path class="crossing" data-vertex="{v}" d="M{x - r:.2f},{y - r:.2f} L{x + r:.2f},{y + r:.2f} '
                f'M{x - r:.2f},{y + r:.2f} L{x + r:.2f},{y - r:.2f}" stroke="black" stroke-width="2"/>'
            )
        else:
            out.append(
                f'<circle class="vertex" data-vertex="{v}" cx="{x:.2f}" cy="{y:.2f}" r="7" '
                f'fill="white" stroke="black"/>'
            )
            out.append(
                f'<text x="{x:.2f}" y="{y + 3:.2f}" font-size="9" text-anchor="middle">{v}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(d: Drawing, out: str | Path) -> Path:
    path = Path(out)
    path.write_text(svg_text(d))
    return path


def count_marks(svg: str) -> tuple[int, int]:
    """(vertices, crossing marks) in an SVG produced here."""
    return svg.count('class="vertex"'), svg.count('class="crossing"')
