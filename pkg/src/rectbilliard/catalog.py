"""Enumerate the equivalence classes of period-K orbits.

For K = 2N the classes correspond one-to-one to the totatives m of N, with
n = N - m and slope m/n, so there are phi(N) of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import BilliardError, ConsistencyError, OddPeriodError
from .exact import totatives
from .simulator import simulate
from .table import ClosedAfter, Generator, Side, Slope, TableSpec, Trajectory
from .unfolding import singular_starts


@dataclass(frozen=True)
class CatalogEntry:
    m: int
    n: int
    type_pair: Tuple[int, int]
    class_name: str
    slope: Optional[Fraction]  # normalized m/n; None for the perpendicular limiting cases
    physical_slope: Optional[Fraction]
    representative: Generator
    singular_starts: List[Fraction] = field(default_factory=list)
    limiting: bool = False

    @property
    def K(self) -> int:
        return sum(self.type_pair)


@dataclass(frozen=True)
class ClassCatalog:
    K: int
    rho: Fraction
    entries: List[CatalogEntry]

    def __len__(self) -> int:
        return len(self.entries)


def _period_two(table: TableSpec) -> List[CatalogEntry]:
    half = Fraction(1, 2)
    return [
        CatalogEntry(
            m=0, n=1, type_pair=(0, 2), class_name="C_2(0)", slope=None, physical_slope=None,
            representative=Generator(Side.BC, half, Slope.vertical(), table), limiting=True,
        ),
        CatalogEntry(
            m=1, n=0, type_pair=(2, 0), class_name="C_2(2)", slope=None, physical_slope=None,
            representative=Generator(Side.AB, half, Slope.vertical(), table), limiting=True,
        ),
    ]


def enumerate_classes(K: int, rho=1) -> ClassCatalog:
    """All classes of least period K on the ``1 x rho`` table, ascending in m.

    Each representative starts on AB at p0 = 1/p, the midpoint of the
    fundamental domain (0, 2/p), so it is never singular.
    """
    table = TableSpec(Fraction(rho))
    if not isinstance(K, int) or K < 1:
        raise BilliardError(f"period must be a positive integer, got {K!r}")
    if K % 2:
        raise OddPeriodError(f"no periodic orbit has odd period {K}: every period is even")
    if K == 2:
        return ClassCatalog(K, table.rho, _period_two(table))
    N = K // 2
    entries = []
    for m in totatives(N):
        n = N - m
        p, q = 2 * m, 2 * n
        slope = Fraction(m, n)
        entries.append(CatalogEntry(
            m=m, n=n, type_pair=(p, q), class_name=f"C_{K}({p})",
            slope=slope, physical_slope=table.rho * slope,
            representative=Generator(Side.AB, Fraction(1, p), Slope.rational(slope), table),
            singular_starts=singular_starts(p, q),
        ))
    return ClassCatalog(K, table.rho, entries)


def representative_orbit(entry: CatalogEntry, max_steps: Optional[int] = None) -> Trajectory:
    """Simulate the entry's representative; it must close after exactly K collisions."""
    traj = simulate(entry.representative, max_steps)
    if not isinstance(traj.outcome, ClosedAfter) or traj.outcome.K != entry.K:
        raise ConsistencyError(f"{entry.class_name}: representative gave {traj.outcome}")
    if traj.type_pair != entry.type_pair:
        raise ConsistencyError(f"{entry.class_name}: simulated type {traj.type_pair} != {entry.type_pair}")
    return traj
