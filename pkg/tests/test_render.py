import xml.etree.ElementTree as ET

from crossbound.bound import verify_main_theorem
from crossbound.crossing import crossing_number, planar_drawing
from crossbound.generators import complete
from crossbound.render import count_marks, render_svg, svg_text


def test_planar_k4():
    svg = svg_text(planar_drawing(complete(4)))
    ET.fromstring(svg)  # well-formed
    assert count_marks(svg) == (4, 0)


def test_marks_match_crossing_count(named):
    for g, cr in named.values():
        d = crossing_number(g).drawing
        assert count_marks(svg_text(d)) == (g.n, d.crossing_count)


def test_redrawn_k5_and_determinism(tmp_path):
    d = verify_main_theorem(complete(5), 1).redraw.drawing
    a = render_svg(d, tmp_path / "a.svg").read_text()
    b = render_svg(d, tmp_path / "b.svg").read_text()
    assert a == b
    assert count_marks(a)[1] <= 2


def test_edges_coloured_by_original_edge():
    d = crossing_number(complete(5)).drawing
    root = ET.fromstring(svg_text(d))
    colours = {}
    for el in root.iter("{http://www.w3.org/2000/svg}line"):
        colours.setdefault(el.get("data-edge"), set()).add(el.get("stroke"))
    assert len(colours) == 10 and all(len(c) == 1 for c in colours.values())
