"""Oracle sweep: closed-form classification against direct simulation.

Every cell is an AB start ``p0 = a/b`` with normalized slope ``m/n`` on a
``1 x rho`` table. A cell agrees when

* the kinds match (periodic vs closed, singular vs vertex hit);
* periodic cells match in (K, p, q), singular cells hit the predicted
  terminal vertex within m + n - 1 segments;
* the folded-back unfolding equals the simulated collision sequence;
* the reversed launch has the same kind and, when periodic, the same set of
  collision points (skipped at p0 = 0, which has no reversed launch).
"""
from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from .exact import format_rational
from .simulator import simulate, simulate_reversed
from .table import ClosedAfter, Generator, HitVertex, Side, Slope, TableSpec
from .unfolding import Periodic, Singular, classify, closed_form_collisions

DEFAULT_RHOS = (Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(3, 2), Fraction(2))


@dataclass(frozen=True)
class Cell:
    p0: Fraction
    slope: Fraction
    rho: Fraction


@dataclass
class CellResult:
    cell: Cell
    kind: str
    K: Optional[int]
    p: Optional[int]
    q: Optional[int]
    agreement: bool
    simulated_K: Optional[int] = None
    problems: List[str] = field(default_factory=list)


@dataclass
class SweepReport:
    results: List[CellResult]

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def disagreements(self) -> List[CellResult]:
        return [r for r in self.results if not r.agreement]

    @property
    def odd_periods(self) -> List[CellResult]:
        return [r for r in self.results
                if (r.K is not None and r.K % 2) or (r.simulated_K is not None and r.simulated_K % 2)]

    def counts(self) -> dict:
        out = {"periodic": 0, "singular": 0, "nonperiodic": 0}
        for r in self.results:
            out[r.kind] = out.get(r.kind, 0) + 1
        return out

    def summary(self) -> str:
        c = self.counts()
        return (f"{self.total} cells: {c['periodic']} periodic, {c['singular']} singular; "
                f"{len(self.disagreements)} disagreements; {len(self.odd_periods)} odd periods")


def grid_starts(max_denominator: int) -> List[Fraction]:
    return sorted({Fraction(a, b) for b in range(1, max_denominator + 1) for a in range(b)})


def grid_slopes(max_sum: int) -> List[Fraction]:
    return sorted(Fraction(m, n) for m in range(1, max_sum) for n in range(1, max_sum - m + 1)
                  if math.gcd(m, n) == 1)


def sweep_cells(max_denominator: int, max_sum: int, rhos: Iterable = DEFAULT_RHOS) -> List[Cell]:
    starts, slopes = grid_starts(max_denominator), grid_slopes(max_sum)
    return [Cell(p0, s, Fraction(rho)) for rho in rhos for s in slopes for p0 in starts]


def check_cell(cell: Cell, max_steps: Optional[int] = None) -> CellResult:
    g = Generator(Side.AB, cell.p0, Slope.rational(cell.slope), TableSpec(cell.rho))
    cls = classify(g)
    traj = simulate(g, max_steps)
    problems = []
    sim_K = traj.outcome.K if isinstance(traj.outcome, ClosedAfter) else None

    if isinstance(cls, Periodic):
        result = CellResult(cell, "periodic", cls.K, cls.p, cls.q, True, sim_K)
        if sim_K is None:
            problems.append(f"classified periodic, simulation gave {traj.outcome}")
        elif (sim_K, *traj.type_pair) != (cls.K, cls.p, cls.q):
            problems.append(f"type mismatch: simulated {sim_K}{traj.type_pair}, predicted {cls.K}{(cls.p, cls.q)}")
        elif closed_form_collisions(g) != traj.collisions:
            problems.append("fold-back sequence differs from simulation")
    elif isinstance(cls, Singular):
        d = cls.diagonal
        result = CellResult(cell, "singular", None, None, None, True, sim_K)
        if not isinstance(traj.outcome, HitVertex):
            problems.append(f"classified singular, simulation gave {traj.outcome}")
        else:
            if traj.outcome.after + 1 > d.m + d.n - 1:
                problems.append(f"vertex reached after {traj.outcome.after + 1} segments")
            if traj.outcome.vertex is not d.end:
                problems.append(f"ended at {traj.outcome.vertex.name}, predicted {d.end.name}")
            folded = closed_form_collisions(g)
            if folded[:-1] != traj.collisions or folded[-1] is not traj.outcome.vertex:
                problems.append("fold-back sequence differs from simulation")
    else:
        result = CellResult(cell, "nonperiodic", None, None, None, True, sim_K)
        problems.append("exact generator classified non-periodic")

    if cell.p0 != 0:
        rev = simulate_reversed(g, max_steps)
        if type(rev.outcome) is not type(traj.outcome):
            problems.append(f"reversal changed outcome: {traj.outcome} -> {rev.outcome}")
        elif isinstance(rev.outcome, ClosedAfter) and rev.point_set() != traj.point_set():
            problems.append("reversal changed the collision-point set")
        elif isinstance(cls, Singular) and rev.outcome.vertex is not cls.diagonal.start:
            problems.append(f"reversed run ended at {rev.outcome.vertex.name}, "
                            f"predicted {cls.diagonal.start.name}")

    result.problems = problems
    result.agreement = not problems
    return result


def run_sweep(max_denominator: int, max_sum: int, rhos: Sequence = DEFAULT_RHOS,
              parallel: bool = False, workers: Optional[int] = None,
              max_steps: Optional[int] = None) -> SweepReport:
    cells = sweep_cells(max_denominator, max_sum, rhos)
    if parallel:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: check_cell(c, max_steps), cells))
    else:
        results = [check_cell(c, max_steps) for c in cells]
    return SweepReport(results)


CSV_COLUMNS = ["p0", "slope", "rho", "kind", "K", "p", "q", "agreement"]


def write_report(report: SweepReport, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in report.results:
            writer.writerow([
                format_rational(r.cell.p0), format_rational(r.cell.slope), format_rational(r.cell.rho),
                r.kind,
                "" if r.K is None else r.K,
                "" if r.p is None else r.p,
                "" if r.q is None else r.q,
                "true" if r.agreement else "false",
            ])
