"""Lattice unfolding and the closed-form orbit classification.

Everything here works in the normalized frame: the generator is first mapped
to an AB start on the unit square (:func:`normalize_generator`), where the
trajectory is the straight line through ``(p0, 0)`` with slope ``m/n``.
Results that name sides or vertices are rotated back to the caller's frame.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import BilliardError, ConsistencyError
from .table import (
    SQUARE,
    CollisionPoint,
    Generator,
    Side,
    SlopeKind,
    Vertex,
    frame_turns,
    normalize_generator,
)


class TileOrientation(enum.Enum):
    ABCD = "ABCD"
    BADC = "BADC"
    CDAB = "CDAB"
    DCBA = "DCBA"

    @property
    def flips_horizontal(self) -> bool:
        return self in (TileOrientation.BADC, TileOrientation.CDAB)

    @property
    def flips_vertical(self) -> bool:
        return self in (TileOrientation.CDAB, TileOrientation.DCBA)

    @property
    def corner_vertex(self) -> Vertex:
        """Which original vertex sits at the tile's bottom-left lattice point."""
        return Vertex[self.value[0]]


def tile_orientation(i: int, j: int) -> TileOrientation:
    """Orientation of the tile with bottom-left corner ``(i, j)``; parity only."""
    return {
        (0, 0): TileOrientation.ABCD,
        (1, 0): TileOrientation.BADC,
        (1, 1): TileOrientation.CDAB,
        (0, 1): TileOrientation.DCBA,
    }[(i % 2, j % 2)]


def lattice_vertex(i: int, j: int) -> Vertex:
    return tile_orientation(i, j).corner_vertex


_VERTEX_PARITY = {Vertex.A: (0, 0), Vertex.B: (1, 0), Vertex.C: (1, 1), Vertex.D: (0, 1)}


@dataclass(frozen=True)
class GeneralizedDiagonal:
    """Vertex-to-vertex orbit whose unfolding runs from a lattice point to ``+(n, m)``."""

    m: int
    n: int
    start: Vertex
    end: Vertex
    length: int
    horizontal_hits: int
    vertical_hits: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.m, self.n)


def generalized_diagonal(m: int, n: int, start: Vertex = Vertex.A) -> GeneralizedDiagonal:
    if m < 1 or n < 1 or math.gcd(m, n) != 1:
        raise BilliardError(f"a generalized diagonal needs coprime positive (m, n), got ({m}, {n})")
    start = Vertex(start)
    si, sj = _VERTEX_PARITY[start]
    end = lattice_vertex(si + n, sj + m)
    return GeneralizedDiagonal(
        m=m, n=n, start=start, end=end,
        length=m + n - 2, horizontal_hits=m - 1, vertical_hits=n - 1,
    )


@dataclass(frozen=True)
class Periodic:
    K: int
    p: int
    q: int
    limiting: bool = False
    kind = "periodic"

    @property
    def class_index(self) -> int:
        return self.p

    @property
    def class_name(self) -> str:
        return f"C_{self.K}({self.p})"


@dataclass(frozen=True)
class Singular:
    """Start lies on a translated generalized diagonal.

    ``ell`` indexes the singular start ``ell/m`` in the normalized frame and
    ``entry_offset`` is that start position itself.
    """

    diagonal: GeneralizedDiagonal
    entry_offset: Fraction
    ell: int
    kind = "singular"


@dataclass(frozen=True)
class NonPeriodic:
    kind = "nonperiodic"


OrbitClass = Union[Periodic, Singular, NonPeriodic]


def _check_type_pair(p: int, q: int) -> None:
    if p < 1 or q < 1 or math.gcd(p, q) != 2:
        raise BilliardError(f"type (p, q) must satisfy gcd(p, q) = 2, got ({p}, {q})")


def singular_starts(p: int, q: int) -> List[Fraction]:
    """Starts on AB that hit a vertex for slope p/q: ``2*l/p`` for l = 0..p/2-1."""
    _check_type_pair(p, q)
    return [Fraction(2 * ell, p) for ell in range(p // 2)]


def fundamental_domain(p: int, q: int) -> Tuple[Fraction, Fraction]:
    """Open interval ``(0, 2/p)`` of starts that meets each orbit of the family once.

    The limiting period-two types (2, 0) and (0, 2) give ``(0, 1)``.
    """
    if (p, q) in ((2, 0), (0, 2)):
        return Fraction(0), Fraction(1)
    _check_type_pair(p, q)
    return Fraction(0), Fraction(2, p)


def _frame_slope(f: Generator) -> Tuple[int, int]:
    s = f.slope.value
    return s.numerator, s.denominator


def classify(g: Generator) -> OrbitClass:
    """Closed-form classification of the trajectory generated by ``g``.

    In the normalized frame with slope m/n the start is singular iff
    ``p0 * m`` is an integer; otherwise the orbit has type (2m, 2n). Type pairs
    and diagonals are reported in ``g``'s own frame, so a start on a vertical
    side swaps the roles of m and n.
    """
    if g.slope.kind is SlopeKind.IRRATIONAL_APPROX:
        return NonPeriodic()
    horizontal = g.start_side.horizontal
    f = normalize_generator(g)
    if f.slope.kind is SlopeKind.VERTICAL:
        p, q = (2, 0) if horizontal else (0, 2)
        return Periodic(K=2, p=p, q=q, limiting=True)
    m, n = _frame_slope(f)
    scaled = f.p0 * m
    if scaled.denominator == 1:
        return _singular(g, f, m, n, int(scaled))
    p, q = (2 * m, 2 * n) if horizontal else (2 * n, 2 * m)
    return Periodic(K=p + q, p=p, q=q)


def _singular(g: Generator, f: Generator, m: int, n: int, ell: int) -> Singular:
    # Lattice points on y = (m/n)(x - ell/m) satisfy m*i = ell + n*j; take the
    # last one at or behind the start (j <= 0).
    j0 = (-ell * pow(n, -1, m)) % m if m > 1 else 0
    j = j0 - m if j0 else 0
    num = ell + n * j
    if num % m:
        raise ConsistencyError("backward lattice point off the lattice")
    i = num // m
    turns = frame_turns(g.start_side)
    start = lattice_vertex(i, j).rotate(turns)
    end = lattice_vertex(i + n, j + m).rotate(turns)
    mo, no = (m, n) if g.start_side.horizontal else (n, m)
    diagonal = generalized_diagonal(mo, no, start)
    if diagonal.end is not end:
        raise ConsistencyError(f"diagonal end {diagonal.end.name} disagrees with lattice end {end.name}")
    return Singular(diagonal=diagonal, entry_offset=f.p0, ell=ell)


def canonical_representative(g: Generator) -> Generator:
    """Equivalent generator whose start lies in the fundamental domain.

    With r = p0 mod 2/m, the orbit through r also passes 2/m - r, so the
    representative is r or 2/m - r, whichever is below 1/m.
    """
    cls = classify(g)
    if not isinstance(cls, Periodic):
        raise BilliardError(f"canonical representative needs a periodic generator, got {cls.kind}")
    if cls.limiting:
        return g
    m, _ = _frame_slope(normalize_generator(g))
    period = Fraction(2, m)
    r = g.p0 % period
    p0 = r if r < Fraction(1, m) else period - r
    return Generator(g.start_side, p0, g.slope, g.table)


@dataclass(frozen=True)
class Crossing:
    """Intersection of the unfolded line with the grid, in the normalized frame.

    ``line`` is "x" for a vertical grid line (a reflection in BC/DA), "y" for a
    horizontal one (AB/CD), or "corner" at a lattice point, which ends the line.
    ``tile`` is the tile being entered.
    """

    x: Fraction
    y: Fraction
    line: str
    tile: Tuple[int, int]

    @property
    def orientation(self) -> TileOrientation:
        return tile_orientation(*self.tile)


def unfold(g: Generator, reflections: int) -> List[Crossing]:
    """First ``reflections`` grid crossings of the unfolded trajectory.

    Stops early at a lattice point (the trajectory hits a vertex there).
    """
    if reflections < 1:
        raise BilliardError(f"reflections must be at least 1, got {reflections}")
    f = normalize_generator(g)
    p0 = f.p0
    out: List[Crossing] = []
    if f.slope.kind is SlopeKind.VERTICAL:
        return [Crossing(p0, Fraction(j), "y", (0, j)) for j in range(1, reflections + 1)]
    m, n = _frame_slope(f)
    slope = Fraction(m, n)
    i, j = 1, 1
    while len(out) < reflections:
        x_at_j = p0 + j / slope
        if x_at_j == i:
            out.append(Crossing(Fraction(i), Fraction(j), "corner", (i, j)))
            break
        if i < x_at_j:
            y = slope * (i - p0)
            out.append(Crossing(Fraction(i), y, "x", (i, math.floor(y))))
            i += 1
        else:
            out.append(Crossing(x_at_j, Fraction(j), "y", (math.floor(x_at_j), j)))
            j += 1
    return out


def fold(c: Crossing) -> Union[CollisionPoint, Vertex]:
    """Map a crossing back into the unit-square frame using its tile orientation."""
    i, j = c.tile
    orient = c.orientation
    u, v = c.x - i, c.y - j
    if orient.flips_horizontal:
        u = 1 - u
    if orient.flips_vertical:
        v = 1 - v
    if c.line == "corner":
        return {(0, 0): Vertex.A, (1, 0): Vertex.B, (1, 1): Vertex.C, (0, 1): Vertex.D}[(int(u), int(v))]
    if c.line == "x":
        return CollisionPoint(Side.BC, v) if u == 1 else CollisionPoint(Side.DA, 1 - v)
    return CollisionPoint(Side.CD, 1 - u) if v == 1 else CollisionPoint(Side.AB, u)


def fold_back(g: Generator, crossings: List[Crossing]) -> List[Union[CollisionPoint, Vertex]]:
    """Folded crossings expressed on ``g``'s own table labels."""
    turns = frame_turns(g.start_side)
    return [fold(c).rotate(turns) for c in crossings]


def closed_form_collisions(g: Generator, limit: Optional[int] = None) -> List[Union[CollisionPoint, Vertex]]:
    """Collision sequence predicted without simulation: one period, or up to the vertex."""
    cls = classify(g)
    if isinstance(cls, Periodic):
        return fold_back(g, unfold(g, cls.K))
    if isinstance(cls, Singular):
        d = cls.diagonal
        return fold_back(g, unfold(g, d.length + 1))
    if limit is None:
        raise BilliardError("non-periodic trajectories need an explicit limit")
    return fold_back(g, unfold(g, limit))
