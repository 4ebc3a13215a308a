"""Command-line interface.

Rationals cross this boundary as ``A/B`` strings or integer literals. The
``--slope`` flag is the physical tangent of the launch angle measured against
the start side; ``inf`` (or ``1/0``) launches perpendicular to it.

Exit codes: 0 success, 1 bad input, 2 internal consistency failure.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from . import kernel, serialize
from .catalog import enumerate_classes
from .errors import BilliardError, ConsistencyError
from .exact import TOTIENT_METHODS, format_rational, parse_rational
from .render import render_folded, render_unfolded
from .simulator import simulate, simulate_reversed
from .table import Generator, Side, SlopeKind, Vertex
from .unfolding import (
    Periodic,
    Singular,
    classify,
    generalized_diagonal,
    normalize_generator,
    singular_starts,
)
from .verify import DEFAULT_RHOS, run_sweep, write_report

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(args, flag: str) -> Fraction:
    text = getattr(args, flag.lstrip("-").replace("-", "_"))
    try:
        return parse_rational(text)
    except BilliardError as exc:
        raise BilliardError(f"{flag}: {exc}") from None


def _generator(args) -> Generator:
    p0 = _rational(args, "--p0")
    rho = _rational(args, "--rho")
    side = Side[args.side]
    if getattr(args, "slope_approx", None) is not None:
        return Generator.physical(side, p0, float(args.slope_approx), rho)
    if args.slope is None:
        raise BilliardError("--slope: required (or give --slope-approx)")
    text = args.slope.strip().lower()
    if text in ("inf", "1/0"):
        return Generator.physical(side, p0, None, rho)
    return Generator.physical(side, p0, _rational(args, "--slope"), rho)


def _add_generator_flags(p: argparse.ArgumentParser, approx: bool = False) -> None:
    p.add_argument("--p0", required=True, help="start position along the start side, A/B")
    p.add_argument("--slope", help="tan of the launch angle against the start side, A/B or inf")
    if approx:
        p.add_argument("--slope-approx", type=float, help="approximate irrational tangent (float)")
    p.add_argument("--rho", default="1", help="aspect ratio: height of BC/DA with AB of length 1")
    p.add_argument("--side", default="AB", choices=[s.name for s in Side])


def _print(obj, as_json: bool, text: str) -> None:
    sys.stdout.write(serialize.dumps(obj) if as_json else text + "\n")


def cmd_classify(args) -> int:
    g = _generator(args)
    cls = classify(g)
    obj = serialize.orbit_dict(g, cls)
    if isinstance(cls, Periodic):
        text = f"periodic: K={cls.K} type ({cls.p},{cls.q}) class {cls.class_name}"
    elif isinstance(cls, Singular):
        d = cls.diagonal
        text = (f"singular: on generalized diagonal {d.start.name}->{d.end.name} "
                f"(m={d.m}, n={d.n}, length {d.length}), offset {format_rational(cls.entry_offset)}")
    else:
        text = "nonperiodic: irrational normalized slope"
    _print(obj, args.json, text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cat = enumerate_classes(args.period, _rational(args, "--rho"))
    lines = [f"period {cat.K} on rho={format_rational(cat.rho)}: {len(cat)} classes"]
    for e in cat.entries:
        slope = "perpendicular" if e.slope is None else format_rational(e.physical_slope)
        lines.append(f"  {e.class_name:<10} type {e.type_pair}  tan(alpha)={slope}  "
                     f"p0={format_rational(e.representative.p0)} on {e.representative.start_side.name}")
    _print(serialize.catalog_dict(cat), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_diagonal(args) -> int:
    d = generalized_diagonal(args.m, args.n, Vertex[args.start])
    text = (f"{d.start.name} -> {d.end.name}: length {d.length} "
            f"({d.horizontal_hits} horizontal, {d.vertical_hits} vertical)")
    _print(serialize.diagonal_dict(d), args.json, text)
    return EXIT_OK


def cmd_singular_starts(args) -> int:
    starts = [format_rational(v) for v in singular_starts(args.p, args.q)]
    _print({"p": args.p, "q": args.q, "singular_starts": starts}, args.json, " ".join(starts))
    return EXIT_OK


def cmd_simulate(args) -> int:
    g = _generator(args)
    run = simulate_reversed if args.reverse else simulate
    t = run(g, args.max_steps)
    obj = serialize.trajectory_dict(t)
    lines = [f"{'#':>4}  {'side':<4} {'position':>12} {'x':>12} {'y':>12}  angle"]
    for k, c in enumerate(obj["collisions"], 1):
        lines.append(f"{k:>4}  {c['side']:<4} {c['position']:>12} {c['x']:>12} {c['y']:>12}  {c['angle']}")
    if obj["K"] is not None:
        lines.append(f"closed after {obj['K']} collisions, type ({obj['p']},{obj['q']})")
    elif obj["vertex"] is not None:
        lines.append(f"hit vertex {obj['vertex']} after {obj['steps']} collisions")
    else:
        lines.append(f"truncated after {obj['steps']} collisions")
    _print(obj, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_render(args) -> int:
    g = _generator(args)
    if args.unfold:
        overlays = []
        if args.overlay_singular and g.slope.kind is SlopeKind.NORMALIZED_RATIONAL:
            s = normalize_generator(g).slope.value
            overlays = singular_starts(2 * s.numerator, 2 * s.denominator)
        svg = render_unfolded(g, args.unfold, overlays=overlays)
    else:
        svg = render_folded(simulate(g, args.max_steps))
    with open(args.out, "w", newline="\n") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_totient(args) -> int:
    if args.N < 1:
        raise BilliardError(f"N: totient needs a positive integer, got {args.N}")
    methods = list(TOTIENT_METHODS) if args.method == "all" else [args.method]
    values = {name: TOTIENT_METHODS[name](args.N) for name in methods}
    if len(set(values.values())) != 1:
        raise ConsistencyError(f"totient methods disagree for N={args.N}: {values}")
    text = "\n".join(f"{name}: {v}" for name, v in values.items())
    _print({"N": args.N, **values}, args.json, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rhos = [parse_rational(r) for r in args.rho] if args.rho else list(DEFAULT_RHOS)
    except BilliardError as exc:
        raise BilliardError(f"--rho: {exc}") from None
    report = run_sweep(args.max_denominator, args.max_sum, rhos,
                       parallel=args.parallel, workers=args.workers, max_steps=args.max_steps)
    if args.report:
        write_report(report, args.report)
    bad = report.disagreements
    if args.json:
        obj = {"cells": report.total, **report.counts(), "disagreements": len(bad),
               "odd_periods": len(report.odd_periods), "backend": kernel.BACKEND}
        sys.stdout.write(serialize.dumps(obj))
    else:
        print(report.summary())
        for r in bad[:20]:
            c = r.cell
            print(f"  p0={format_rational(c.p0)} slope={format_rational(c.slope)} "
                  f"rho={format_rational(c.rho)}: {'; '.join(r.problems)}")
    return EXIT_OK if not bad and not report.odd_periods else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rectbilliard", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="closed-form orbit class of a generator")
    _add_generator_flags(p, approx=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="all classes of a given period")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--rho", default="1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("diagonal", help="generalized diagonal of slope m/n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", default="A", choices=[v.name for v in Vertex])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diagonal)

    p = sub.add_parser("singular-starts", help="starts on AB that end in a vertex")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_singular_starts)

    p = sub.add_parser("simulate", help="direct exact simulation")
    _add_generator_flags(p)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--reverse", action="store_true", help="launch with the mirrored slope")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("render", help="write an SVG figure")
    _add_generator_flags(p)
    p.add_argument("--unfold", type=int, default=0, metavar="N", help="unfolded view with N crossings")
    p.add_argument("--overlay-singular", action="store_true", help="draw singular starts (unfolded view)")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("totient", help="Euler's totient by several methods")
    p.add_argument("N", type=int)
    p.add_argument("--method", default="product", choices=[*TOTIENT_METHODS, "all"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_totient)

    p = sub.add_parser("verify", help="oracle sweep: classification vs simulation")
    p.add_argument("--max-denominator", type=int, required=True)
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--rho", action="append", help="aspect ratio (repeatable); default 1,1/2,3/4,3/2,2")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--report", metavar="FILE.csv")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BilliardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
