"""Tables, sides, vertices, generators and collision points.

Conventions shared by every engine and renderer:

* The table is ``[0, 1] x [0, rho]`` with ``A=(0,0)``, ``B=(1,0)``,
  ``C=(1,rho)``, ``D=(0,rho)``.
* Positions along a side are normalized to that side's length and measured
  from its first-named vertex (AB from A, BC from B, CD from C, DA from D).
* A generator's slope is stored in normalized (unit-square) coordinates,
  ``s = |dy/dx| / rho``. The outgoing direction depends on the start side::

      AB: (+1, +s)   BC: (-1, +s)   CD: (-1, -s)   DA: (+1, -s)

  which is the AB convention seen from a frame rotated by a quarter turn per
  side. ``Vertical`` means perpendicular to the start side.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import BilliardError


class Side(enum.IntEnum):
    AB = 0
    BC = 1
    CD = 2
    DA = 3

    @property
    def horizontal(self) -> bool:
        return self in (Side.AB, Side.CD)

    def rotate(self, quarter_turns: int) -> "Side":
        return Side((self + quarter_turns) % 4)


class Vertex(enum.IntEnum):
    A = 0
    B = 1
    C = 2
    D = 3

    def rotate(self, quarter_turns: int) -> "Vertex":
        return Vertex((self + quarter_turns) % 4)


class AngleClass(enum.Enum):
    ALPHA = "alpha"
    COMPLEMENT = "complement"


@dataclass(frozen=True)
class TableSpec:
    rho: Fraction = Fraction(1)

    def __post_init__(self):
        rho = Fraction(self.rho)
        if rho <= 0:
            raise BilliardError(f"aspect ratio must be positive, got {rho}")
        object.__setattr__(self, "rho", rho)

    @property
    def is_square(self) -> bool:
        return self.rho == 1


SQUARE = TableSpec()


def vertex_coordinates(v: Vertex, table: TableSpec = SQUARE) -> Tuple[Fraction, Fraction]:
    rho = table.rho
    return {
        Vertex.A: (Fraction(0), Fraction(0)),
        Vertex.B: (Fraction(1), Fraction(0)),
        Vertex.C: (Fraction(1), rho),
        Vertex.D: (Fraction(0), rho),
    }[v]


class SlopeKind(enum.Enum):
    NORMALIZED_RATIONAL = "rational"
    VERTICAL = "vertical"
    IRRATIONAL_APPROX = "irrational"


@dataclass(frozen=True)
class Slope:
    kind: SlopeKind
    value: Union[Fraction, float, None] = None

    def __post_init__(self):
        if self.kind is SlopeKind.NORMALIZED_RATIONAL:
            value = Fraction(self.value)
            if value <= 0:
                # zero slope would run parallel to the start side
                raise BilliardError(f"normalized slope must be positive, got {value}")
            object.__setattr__(self, "value", value)
        elif self.kind is SlopeKind.IRRATIONAL_APPROX:
            if not float(self.value) > 0:
                raise BilliardError(f"slope must be positive, got {self.value}")
            object.__setattr__(self, "value", float(self.value))
        else:
            object.__setattr__(self, "value", None)

    @classmethod
    def rational(cls, value) -> "Slope":
        return cls(SlopeKind.NORMALIZED_RATIONAL, Fraction(value))

    @classmethod
    def vertical(cls) -> "Slope":
        return cls(SlopeKind.VERTICAL)

    @classmethod
    def irrational(cls, value: float) -> "Slope":
        return cls(SlopeKind.IRRATIONAL_APPROX, value)

    @property
    def exact(self) -> bool:
        return self.kind is not SlopeKind.IRRATIONAL_APPROX

    def inverted(self) -> "Slope":
        """The same line measured against the perpendicular side."""
        if self.kind is SlopeKind.NORMALIZED_RATIONAL:
            return Slope.rational(1 / self.value)
        if self.kind is SlopeKind.IRRATIONAL_APPROX:
            return Slope.irrational(1.0 / self.value)
        raise BilliardError("a perpendicular launch has no inverted slope")

    def __str__(self) -> str:
        if self.kind is SlopeKind.VERTICAL:
            return "vertical"
        if self.kind is SlopeKind.IRRATIONAL_APPROX:
            return f"~{self.value!r}"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Generator:
    """Initial condition: a point on ``start_side`` and a launch slope."""

    start_side: Side
    p0: Fraction
    slope: Slope
    table: TableSpec = SQUARE

    def __post_init__(self):
        object.__setattr__(self, "start_side", Side(self.start_side))
        p0 = Fraction(self.p0)
        if not 0 <= p0 < 1:
            raise BilliardError(f"start position must lie in [0, 1), got {p0}")
        if self.slope.kind is SlopeKind.VERTICAL and p0 == 0:
            raise BilliardError("a perpendicular launch from a vertex runs along a side")
        object.__setattr__(self, "p0", p0)

    @classmethod
    def square(cls, p0, slope, side: Side = Side.AB) -> "Generator":
        return cls(side, Fraction(p0), Slope.rational(slope), SQUARE)

    @classmethod
    def physical(cls, side: Side, p0, tan_alpha, rho=1) -> "Generator":
        """Build from the physical tangent of the launch angle with the start side.

        ``tan_alpha=None`` launches perpendicular to the side; a float is taken
        as an approximation of an irrational tangent.
        """
        table = TableSpec(Fraction(rho))
        side = Side(side)
        if tan_alpha is None:
            return cls(side, Fraction(p0), Slope.vertical(), table)
        if isinstance(tan_alpha, float):
            rho_f = float(table.rho)
            s = tan_alpha / rho_f if side.horizontal else 1.0 / (tan_alpha * rho_f)
            return cls(side, Fraction(p0), Slope.irrational(s), table)
        tan_alpha = Fraction(tan_alpha)
        if tan_alpha <= 0:
            raise BilliardError(f"launch tangent must be positive, got {tan_alpha}")
        s = tan_alpha / table.rho if side.horizontal else 1 / (tan_alpha * table.rho)
        return cls(side, Fraction(p0), Slope.rational(s), table)

    @property
    def physical_tangent(self) -> Optional[Fraction]:
        """tan of the launch angle against the start side, or None if perpendicular."""
        if self.slope.kind is SlopeKind.VERTICAL:
            return None
        s, rho = self.slope.value, self.table.rho
        return s * rho if self.start_side.horizontal else 1 / (s * rho)

    def start_point(self) -> Tuple[Fraction, Fraction]:
        return side_point(self.start_side, self.p0, self.table)

    def direction(self) -> Tuple[Fraction, Fraction]:
        """Outgoing direction in physical coordinates (exact paths only)."""
        if not self.slope.exact:
            raise BilliardError("exact direction requested for an irrational slope")
        if self.slope.kind is SlopeKind.VERTICAL:
            return {
                Side.AB: (Fraction(0), Fraction(1)),
                Side.BC: (Fraction(-1), Fraction(0)),
                Side.CD: (Fraction(0), Fraction(-1)),
                Side.DA: (Fraction(1), Fraction(0)),
            }[self.start_side]
        sx, sy = _DIRECTION_SIGNS[self.start_side]
        return Fraction(sx), sy * self.slope.value * self.table.rho


_DIRECTION_SIGNS = {Side.AB: (1, 1), Side.BC: (-1, 1), Side.CD: (-1, -1), Side.DA: (1, -1)}


@dataclass(frozen=True)
class CollisionPoint:
    side: Side
    position: Fraction

    def __post_init__(self):
        position = Fraction(self.position)
        if not 0 < position < 1:
            raise BilliardError(f"collision position must lie strictly inside (0, 1), got {position}")
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "position", position)

    @property
    def angle_class(self) -> AngleClass:
        return AngleClass.ALPHA if self.side.horizontal else AngleClass.COMPLEMENT

    def rotate(self, quarter_turns: int) -> "CollisionPoint":
        return CollisionPoint(self.side.rotate(quarter_turns), self.position)


def side_point(side: Side, position, table: TableSpec = SQUARE) -> Tuple[Fraction, Fraction]:
    """Cartesian point at a normalized ``position`` along ``side`` (endpoints allowed)."""
    t = Fraction(position)
    rho = table.rho
    if side is Side.AB:
        return t, Fraction(0)
    if side is Side.BC:
        return Fraction(1), t * rho
    if side is Side.CD:
        return 1 - t, rho
    return Fraction(0), (1 - t) * rho


def physical_coordinates(c: CollisionPoint, table: TableSpec = SQUARE) -> Tuple[Fraction, Fraction]:
    return side_point(c.side, c.position, table)


@dataclass(frozen=True)
class ClosedAfter:
    K: int


@dataclass(frozen=True)
class HitVertex:
    vertex: Vertex
    after: int


@dataclass(frozen=True)
class Truncated:
    max_steps: int


Outcome = Union[ClosedAfter, HitVertex, Truncated]


@dataclass
class Trajectory:
    generator: Generator
    collisions: List[CollisionPoint]
    outcome: Outcome
    reversed: bool = False
    start: Tuple[Fraction, Fraction] = field(default=(Fraction(0), Fraction(0)))

    @property
    def kind(self) -> str:
        if isinstance(self.outcome, ClosedAfter):
            return "periodic"
        if isinstance(self.outcome, HitVertex):
            return "singular"
        return "truncated"

    @property
    def horizontal_count(self) -> int:
        return sum(1 for c in self.collisions if c.side.horizontal)

    @property
    def vertical_count(self) -> int:
        return len(self.collisions) - self.horizontal_count

    @property
    def type_pair(self) -> Optional[Tuple[int, int]]:
        """(p, q) for closed trajectories, else None."""
        if not isinstance(self.outcome, ClosedAfter):
            return None
        return self.horizontal_count, self.vertical_count

    def point_set(self) -> frozenset:
        return frozenset((c.side, c.position) for c in self.collisions)

    def path(self) -> List[Tuple[Fraction, Fraction]]:
        """Start point, every collision point, then the terminal vertex if any."""
        table = self.generator.table
        pts = [self.start] + [physical_coordinates(c, table) for c in self.collisions]
        if isinstance(self.outcome, HitVertex):
            pts.append(vertex_coordinates(self.outcome.vertex, table))
        return pts


def frame_turns(side: Side) -> int:
    """Quarter turns taking the normalized frame (start on AB) back to ``side``."""
    return int(side)


def normalize_generator(g: Generator) -> Generator:
    """Equivalent generator starting on AB of the unit square.

    Horizontal starts keep their normalized slope (a CD start is the AB start of
    the half-turned table). Vertical starts are quarter-turned, which inverts
    both the slope and the effective aspect ratio; on the unit square only the
    inverted slope survives. Map results back with ``frame_turns(g.start_side)``.
    """
    if not g.slope.exact:
        raise BilliardError("classification requires an exact slope")
    slope = g.slope
    if slope.kind is SlopeKind.NORMALIZED_RATIONAL and not g.start_side.horizontal:
        slope = slope.inverted()
    return Generator(Side.AB, g.p0, slope, SQUARE)
