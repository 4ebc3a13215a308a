import os
import xml.etree.ElementTree as ET
from fractions import Fraction as F
from pathlib import Path

import pytest

from rectbilliard import Generator, render_folded, render_unfolded, singular_starts, simulate
from rectbilliard.errors import BilliardError
from rectbilliard.render import fmt

GOLDEN = Path(__file__).parent / "golden"
NS = "{http://www.w3.org/2000/svg}"

# unfolded period six, folded period ten, a diagonal, and a family with its singular lines
FIGURES = {
    "unfolded_period6.svg": lambda: render_unfolded(Generator.square(F(3, 5), F(1, 2)), 6),
    "folded_period10.svg": lambda: render_folded(simulate(Generator.square(F(3, 20), F(3, 2)))),
    "diagonal_1_4.svg": lambda: render_folded(simulate(Generator.square(F(0), F(1, 4)))),
    "family_slope_3_2.svg": lambda: render_unfolded(Generator.square(F(3, 20), F(3, 2)), 10,
                                              overlays=singular_starts(6, 4)),
}


def _check_golden(name, svg):
    path = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(svg, newline="\n")
    assert svg == path.read_text(), f"{name} drifted from golden"


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_golden(name):
    svg = FIGURES[name]()
    assert svg == FIGURES[name]()
    _check_golden(name, svg)


def test_fmt_rounds_half_even():
    assert fmt(F(1, 3)) == "0.333333"
    assert fmt(F(1, 2 * 10**6)) == "0.000000"
    assert fmt(F(3, 2 * 10**6)) == "0.000002"
    assert fmt(-F(1, 4)) == "-0.250000"


def _elements(svg, tag):
    return ET.fromstring(svg).findall(f".//{NS}{tag}")


def test_folded_closed_orbit_structure():
    svg = FIGURES["folded_period10.svg"]()
    # ten directed segments, ten collision dots, no separate start dot
    assert len(_elements(svg, "polyline")) == 10
    assert len(_elements(svg, "circle")) == 10
    assert [t.text for t in _elements(svg, "text")] == ["A", "B", "C", "D"]


def test_diagonal_runs_corner_to_corner():
    svg = FIGURES["diagonal_1_4.svg"]()
    lines = _elements(svg, "polyline")
    assert len(lines) == 4
    first = lines[0].get("points").split()[0]
    last = lines[-1].get("points").split()[-1]
    # A at bottom-left, D at top-left of a 300px table with 30px margin
    assert first == "30.000000,330.000000" and last == "30.000000,30.000000"


def test_unfolded_shading():
    svg = FIGURES["unfolded_period6.svg"]()
    rects = _elements(svg, "rect")
    shaded = [r for r in rects if r.get("fill") != "none"]
    assert shaded and len(shaded) < len(rects)


def test_render_needs_segments():
    from rectbilliard.table import Trajectory, Truncated
    g = Generator.square(F(1, 5), F(2))
    with pytest.raises(BilliardError):
        render_folded(Trajectory(g, [], Truncated(0), start=g.start_point()))
