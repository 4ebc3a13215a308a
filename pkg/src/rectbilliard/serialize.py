"""JSON-ready dictionaries. Rationals are written as "A/B" strings, never floats.

Orbit and trajectory objects always carry the same keys
(kind, K, p, q, class, collisions, singular_starts); absent values are null.
"""
from __future__ import annotations

import json

from .catalog import CatalogEntry, ClassCatalog
from .exact import format_rational as rat
from .table import (
    ClosedAfter,
    CollisionPoint,
    Generator,
    HitVertex,
    SlopeKind,
    Trajectory,
    Vertex,
    normalize_generator,
    physical_coordinates,
)
from .unfolding import (
    GeneralizedDiagonal,
    OrbitClass,
    Periodic,
    Singular,
    closed_form_collisions,
    singular_starts,
)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def collision_dict(c: CollisionPoint, table) -> dict:
    x, y = physical_coordinates(c, table)
    return {"side": c.side.name, "position": rat(c.position), "x": rat(x), "y": rat(y),
            "angle": c.angle_class.value}


def event_dict(e, table) -> dict:
    if isinstance(e, Vertex):
        return {"vertex": e.name}
    return collision_dict(e, table)


def diagonal_dict(d: GeneralizedDiagonal) -> dict:
    return {"m": d.m, "n": d.n, "start": d.start.name, "end": d.end.name, "length": d.length,
            "horizontal_hits": d.horizontal_hits, "vertical_hits": d.vertical_hits}


def generator_dict(g: Generator) -> dict:
    tan = g.physical_tangent
    slope = g.slope
    return {
        "side": g.start_side.name,
        "p0": rat(g.p0),
        "slope": rat(slope.value) if slope.kind is SlopeKind.NORMALIZED_RATIONAL else str(slope),
        "tan_alpha": rat(tan) if slope.kind is SlopeKind.NORMALIZED_RATIONAL else None,
        "rho": rat(g.table.rho),
    }


def _frame_singular_starts(g: Generator):
    if g.slope.kind is not SlopeKind.NORMALIZED_RATIONAL:
        return []
    s = normalize_generator(g).slope.value
    return [rat(v) for v in singular_starts(2 * s.numerator, 2 * s.denominator)]


def orbit_dict(g: Generator, cls: OrbitClass) -> dict:
    out = {"kind": cls.kind, "K": None, "p": None, "q": None, "class": None,
           "collisions": [], "singular_starts": _frame_singular_starts(g),
           "diagonal": None, "generator": generator_dict(g)}
    if isinstance(cls, Periodic):
        out.update(K=cls.K, p=cls.p, q=cls.q, **{"class": cls.class_name})
    elif isinstance(cls, Singular):
        out["diagonal"] = diagonal_dict(cls.diagonal)
    if cls.kind != "nonperiodic":
        out["collisions"] = [event_dict(e, g.table) for e in closed_form_collisions(g)]
    return out


def trajectory_dict(t: Trajectory) -> dict:
    o = t.outcome
    out = {"kind": t.kind, "K": None, "p": None, "q": None, "class": None,
           "collisions": [collision_dict(c, t.generator.table) for c in t.collisions],
           "singular_starts": _frame_singular_starts(t.generator),
           "outcome": type(o).__name__, "vertex": None, "steps": len(t.collisions),
           "reversed": t.reversed, "generator": generator_dict(t.generator)}
    if isinstance(o, ClosedAfter):
        p, q = t.type_pair
        out.update(K=o.K, p=p, q=q, **{"class": f"C_{o.K}({p})"})
    elif isinstance(o, HitVertex):
        out["vertex"] = o.vertex.name
    return out


def entry_dict(e: CatalogEntry) -> dict:
    p, q = e.type_pair
    return {
        "m": e.m, "n": e.n, "p": p, "q": q, "class": e.class_name,
        "slope": None if e.slope is None else rat(e.slope),
        "tan_alpha": None if e.physical_slope is None else rat(e.physical_slope),
        "representative": generator_dict(e.representative),
        "singular_starts": [rat(v) for v in e.singular_starts],
        "limiting": e.limiting,
    }


def catalog_dict(cat: ClassCatalog) -> dict:
    return {"K": cat.K, "rho": rat(cat.rho), "count": len(cat.entries),
            "entries": [entry_dict(e) for e in cat.entries]}


__all__ = [
    "catalog_dict", "collision_dict", "diagonal_dict", "dumps", "entry_dict",
    "generator_dict", "orbit_dict", "trajectory_dict",
]
