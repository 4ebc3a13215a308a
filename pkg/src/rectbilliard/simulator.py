"""Direct specular-reflection simulation in exact arithmetic.

This engine never consults the closed-form classification: periodicity is
detected only by the exact state (point and outgoing direction) recurring.
It runs in physical coordinates on the ``1 x rho`` rectangle, so it also
checks the aspect-ratio scaling independently of the unfolding engine.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Optional, Tuple, Union

from . import kernel
from .errors import BilliardError
from .table import (
    SQUARE,
    ClosedAfter,
    CollisionPoint,
    Generator,
    HitVertex,
    Side,
    TableSpec,
    Trajectory,
    Truncated,
    Vertex,
)

DEFAULT_MAX_STEPS = 10_000

Point = Tuple[Fraction, Fraction]


def default_max_steps() -> int:
    value = os.environ.get("BILLIARD_MAX_STEPS")
    if not value:
        return DEFAULT_MAX_STEPS
    try:
        steps = int(value)
    except ValueError:
        raise BilliardError(f"BILLIARD_MAX_STEPS must be a positive integer, got {value!r}")
    if steps < 1:
        raise BilliardError(f"BILLIARD_MAX_STEPS must be a positive integer, got {value!r}")
    return steps


def _sides_at(point: Point, table: TableSpec):
    x, y = point
    sides = []
    if y == 0 and 0 <= x <= 1:
        sides.append(Side.AB)
    if x == 1 and 0 <= y <= table.rho:
        sides.append(Side.BC)
    if y == table.rho and 0 <= x <= 1:
        sides.append(Side.CD)
    if x == 0 and 0 <= y <= table.rho:
        sides.append(Side.DA)
    return sides


_INWARD_NORMAL = {Side.AB: (0, 1), Side.BC: (-1, 0), Side.CD: (0, -1), Side.DA: (1, 0)}


def _check_launch(point: Point, direction: Point, table: TableSpec) -> None:
    dx, dy = direction
    if dx == 0 and dy == 0:
        raise BilliardError("zero direction")
    sides = _sides_at(point, table)
    if not sides:
        raise BilliardError(f"point {point} is not on the table boundary")
    for side in sides:
        nx, ny = _INWARD_NORMAL[side]
        inward = nx * dx + ny * dy
        if inward == 0:
            raise BilliardError(f"direction {direction} is parallel to side {side.name}")
        if inward < 0:
            raise BilliardError(f"direction {direction} leaves the table through {side.name}")


def side_position(side: Side, point: Point, table: TableSpec) -> Fraction:
    x, y = point
    if side is Side.AB:
        return x
    if side is Side.BC:
        return y / table.rho
    if side is Side.CD:
        return 1 - x
    return 1 - y / table.rho


def step(point: Point, direction: Point, table: TableSpec = SQUARE):
    """Advance to the next boundary hit and reflect.

    Returns ``(new_point, new_direction, event)`` where ``event`` is a
    :class:`CollisionPoint` or, if the ray lands on a corner, a :class:`Vertex`
    (the direction is then returned unreflected; the trajectory ends there).
    """
    x, y = Fraction(point[0]), Fraction(point[1])
    dx, dy = Fraction(direction[0]), Fraction(direction[1])
    _check_launch((x, y), (dx, dy), table)
    rho = table.rho
    tx = ((1 - x) / dx if dx > 0 else -x / dx) if dx else None
    ty = ((rho - y) / dy if dy > 0 else -y / dy) if dy else None
    if tx is not None and ty is not None and tx == ty:
        corner = (1 if dx > 0 else 0, rho if dy > 0 else 0)
        vertex = {(0, 0): Vertex.A, (1, 0): Vertex.B, (1, rho): Vertex.C, (0, rho): Vertex.D}[corner]
        return (Fraction(corner[0]), Fraction(corner[1])), (dx, dy), vertex
    if ty is None or (tx is not None and tx < ty):
        new = (Fraction(1 if dx > 0 else 0), y + tx * dy)
        side = Side.BC if dx > 0 else Side.DA
        new_dir = (-dx, dy)
    else:
        new = (x + ty * dx, rho if dy > 0 else Fraction(0))
        side = Side.CD if dy > 0 else Side.AB
        new_dir = (dx, -dy)
    return new, new_dir, CollisionPoint(side, side_position(side, new, table))


def _integer_direction(direction: Point) -> Tuple[int, int]:
    dx, dy = Fraction(direction[0]), Fraction(direction[1])
    scale = math.lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * scale), int(dy * scale)
    g = math.gcd(ix, iy)
    return ix // g, iy // g


def trace(point: Point, direction: Point, table: TableSpec = SQUARE,
          max_steps: Optional[int] = None, backend: Optional[str] = None):
    """Run the kernel from an arbitrary boundary launch.

    Returns ``(outcome, collisions)``. All coordinates are rescaled to a
    common integer grid first; the scale is chosen so every collision of this
    line lands on it.
    """
    if max_steps is None:
        max_steps = default_max_steps()
    if max_steps < 1:
        raise BilliardError(f"max_steps must be at least 1, got {max_steps}")
    x0, y0 = Fraction(point[0]), Fraction(point[1])
    _check_launch((x0, y0), direction, table)
    dx, dy = _integer_direction(direction)
    rho = table.rho
    scale = math.lcm(x0.denominator, y0.denominator, rho.denominator) * max(1, abs(dx)) * max(1, abs(dy))
    w, h = scale, int(rho * scale)
    status, corner, events = kernel.run(
        int(x0 * scale), int(y0 * scale), dx, dy, w, h, max_steps, backend=backend
    )
    collisions = []
    for i in range(0, len(events), 3):
        side = Side(events[i])
        ex, ey = events[i + 1], events[i + 2]
        if side is Side.AB:
            pos = Fraction(ex, w)
        elif side is Side.BC:
            pos = Fraction(ey, h)
        elif side is Side.CD:
            pos = 1 - Fraction(ex, w)
        else:
            pos = 1 - Fraction(ey, h)
        collisions.append(CollisionPoint(side, pos))
    if status == kernel.CLOSED:
        outcome: Union[ClosedAfter, HitVertex, Truncated] = ClosedAfter(len(collisions))
    elif status == kernel.VERTEX:
        outcome = HitVertex(Vertex(corner), len(collisions))
    else:
        outcome = Truncated(max_steps)
    return outcome, collisions


def _require_exact(g: Generator) -> None:
    if not g.slope.exact:
        raise BilliardError("direct simulation needs an exact (rational or vertical) slope")


def simulate(g: Generator, max_steps: Optional[int] = None, backend: Optional[str] = None) -> Trajectory:
    _require_exact(g)
    start = g.start_point()
    outcome, collisions = trace(start, g.direction(), g.table, max_steps, backend)
    return Trajectory(g, collisions, outcome, reversed=False, start=start)


def reversed_direction(g: Generator) -> Point:
    """Launch direction of the time-reversed trajectory through the start point."""
    dx, dy = g.direction()
    return (-dx, dy) if g.start_side.horizontal else (dx, -dy)


def simulate_reversed(g: Generator, max_steps: Optional[int] = None, backend: Optional[str] = None) -> Trajectory:
    """Simulate from the start point with the mirrored (negative) slope."""
    _require_exact(g)
    if g.p0 == 0:
        raise BilliardError("a trajectory launched from a vertex has no reversed launch")
    start = g.start_point()
    outcome, collisions = trace(start, reversed_direction(g), g.table, max_steps, backend)
    return Trajectory(g, collisions, outcome, reversed=True, start=start)
