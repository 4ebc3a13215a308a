"""Deterministic SVG figures of folded and unfolded trajectories.

Coordinates are exact rationals until the last moment and are printed with
six decimals, rounded half-to-even, so output is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import BilliardError
from .table import ClosedAfter, Generator, HitVertex, SlopeKind, Trajectory, Vertex, vertex_coordinates
from .table import normalize_generator
from .unfolding import unfold

DECIMALS = 6


def fmt(value) -> str:
    """Six-decimal rendering of an exact rational, ties to even."""
    scaled = round(Fraction(value) * 10 ** DECIMALS)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** DECIMALS)
    return f"{sign}{whole}.{frac:0{DECIMALS}d}"


@dataclass(frozen=True)
class Style:
    unit: int = 300            # pixels per unit length (folded view)
    tile: int = 60             # pixels per tile side (unfolded view)
    margin: int = 30
    table_stroke: str = "#1f4e9c"
    path_stroke: str = "#000000"
    dot_fill: str = "#d62728"
    shade_fill: str = "#cfe3f7"
    overlay_stroke: str = "#d62728"
    stroke_width: str = "1.5"
    dot_radius: str = "4"
    font_size: int = 14
    labels: bool = True


DEFAULT_STYLE = Style()

_ARROW_DEF = (
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" '
    'markerWidth="7" markerHeight="7" orient="auto">'
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="{color}"/></marker></defs>'
)


class _Canvas:
    def __init__(self, width: Fraction, height: Fraction, scale: int, margin: int):
        self.height = height
        self.scale = scale
        self.margin = margin
        self.px_w = width * scale + 2 * margin
        self.px_h = height * scale + 2 * margin
        self.parts: List[str] = []

    def pt(self, x, y) -> Tuple[str, str]:
        return (fmt(self.margin + Fraction(x) * self.scale),
                fmt(self.margin + (self.height - Fraction(y)) * self.scale))

    def add(self, element: str) -> None:
        self.parts.append(element)

    def document(self) -> str:
        w, h = fmt(self.px_w), fmt(self.px_h)
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">')
        return "\n".join([head, *self.parts, "</svg>"]) + "\n"


def _segment(c: _Canvas, a, b, stroke: str, width: str) -> str:
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    pts = " ".join(",".join(c.pt(*p)) for p in (a, mid, b))
    return (f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}" marker-mid="url(#arrow)"/>')


def _dot(c: _Canvas, p, fill: str, radius: str) -> str:
    x, y = c.pt(*p)
    return f'<circle cx="{x}" cy="{y}" r="{radius}" fill="{fill}"/>'


def render_folded(t: Trajectory, style: Style = DEFAULT_STYLE) -> str:
    """Table outline, directed trajectory segments, collision dots, vertex labels."""
    path = t.path()
    if len(path) < 2:
        raise BilliardError("cannot render a trajectory without segments")
    table = t.generator.table
    c = _Canvas(Fraction(1), table.rho, style.unit, style.margin)
    c.add(_ARROW_DEF.format(color=style.path_stroke))
    x0, y0 = c.pt(0, table.rho)
    c.add(f'<rect x="{x0}" y="{y0}" width="{fmt(style.unit)}" height="{fmt(table.rho * style.unit)}" '
          f'fill="none" stroke="{style.table_stroke}" stroke-width="2"/>')
    for a, b in zip(path, path[1:]):
        c.add(_segment(c, a, b, style.path_stroke, style.stroke_width))
    if not isinstance(t.outcome, ClosedAfter):
        c.add(_dot(c, path[0], style.path_stroke, style.dot_radius))
    for p in path[1:1 + len(t.collisions)]:
        c.add(_dot(c, p, style.dot_fill, style.dot_radius))
    if isinstance(t.outcome, HitVertex):
        c.add(_dot(c, path[-1], style.path_stroke, style.dot_radius))
    if style.labels:
        _vertex_labels(c, table, style)
    return c.document()


def _vertex_labels(c: _Canvas, table, style: Style) -> None:
    offset = Fraction(style.font_size, style.unit)
    shifts = {Vertex.A: (-offset, -offset), Vertex.B: (offset / 2, -offset),
              Vertex.C: (offset / 2, offset / 2), Vertex.D: (-offset, offset / 2)}
    for v in Vertex:
        vx, vy = vertex_coordinates(v, table)
        dx, dy = shifts[v]
        x, y = c.pt(vx + dx, vy + dy)
        c.add(f'<text x="{x}" y="{y}" font-family="sans-serif" font-size="{style.font_size}" '
              f'fill="{style.table_stroke}">{v.name}</text>')


def render_unfolded(g: Generator, reflections: int, style: Style = DEFAULT_STYLE,
                    overlays: Sequence = ()) -> str:
    """Unfolded line across the tile lattice.

    Tiles carrying the original orientation ABCD are shaded. ``overlays`` are
    extra start positions on AB (e.g. singular starts) drawn as parallel lines
    over the same height.
    """
    crossings = unfold(g, reflections)
    f = normalize_generator(g)
    height = g.table.rho if g.start_side.horizontal else 1 / g.table.rho
    max_i = max([0] + [cr.tile[0] for cr in crossings])
    max_j = max([0] + [cr.tile[1] for cr in crossings])
    cols, rows = max_i + 1, max_j + 1
    c = _Canvas(Fraction(cols), Fraction(rows) * height, style.tile, style.margin)
    c.add(_ARROW_DEF.format(color=style.path_stroke))

    def plane(x, y):
        return Fraction(x), Fraction(y) * height

    for j in range(rows):
        for i in range(cols):
            x, y = c.pt(*plane(i, j + 1))
            fill = style.shade_fill if i % 2 == 0 and j % 2 == 0 else "none"
            c.add(f'<rect x="{x}" y="{y}" width="{fmt(style.tile)}" height="{fmt(height * style.tile)}" '
                  f'fill="{fill}" stroke="{style.table_stroke}" stroke-width="1"/>')
    top = crossings[-1].y
    for start in overlays:
        a = plane(Fraction(start), 0)
        b = plane(_x_at(f, Fraction(start), top), top)
        pts = " ".join(",".join(c.pt(*p)) for p in (a, b))
        c.add(f'<polyline points="{pts}" fill="none" stroke="{style.overlay_stroke}" '
              f'stroke-width="{style.stroke_width}"/>')
    start = plane(f.p0, 0)
    end = plane(crossings[-1].x, crossings[-1].y)
    c.add(_segment(c, start, end, style.path_stroke, style.stroke_width))
    c.add(_dot(c, start, style.path_stroke, style.dot_radius))
    for cr in crossings:
        c.add(_dot(c, plane(cr.x, cr.y), style.dot_fill, style.dot_radius))
    return c.document()


def _x_at(f: Generator, x0: Fraction, y: Fraction) -> Fraction:
    if f.slope.kind is SlopeKind.VERTICAL:
        return x0
    return x0 + y / f.slope.value
