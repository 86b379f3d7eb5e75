"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import analysis, constructions, descent
from .geometry import DEFAULT_PRECISION
from .render import RenderStyle, figure_to_svg, svg_filename

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

NAMED_MULTIPLIERS = {"sqrt2": -1, "sqrt3": 1, "sqrt5": -1, "sqrt6": -2}


def _expected_multiplier(m: descent.DescentMap) -> Fraction:
    if m.name in NAMED_MULTIPLIERS:
        return Fraction(NAMED_MULTIPLIERS[m.name])
    n = int(m.name[3:])
    return Fraction(n * (n - 1), 2)


def check_map(m: descent.DescentMap) -> list[str]:
    """Problems with one catalog map; empty when all identities hold."""
    try:
        c = descent.form_multiplier(m)
    except descent.NotADescentOfThisForm as e:
        return [str(e)]
    problems = []
    if c != _expected_multiplier(m):
        problems.append(f"{m.name}: multiplier {c}, expected {_expected_multiplier(m)}")
    x, y = descent.ray_image(m)
    if x * x - m.k * y * y != 0:
        problems.append(f"{m.name}: image of (sqrt k, 1) leaves the ray")
    return problems


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_verify_maps(args) -> int:
    maps = descent.catalog(args.triangular_max)
    entries, problems = [], []
    for m in maps:
        problems += check_map(m)
        entries.append(descent.catalog_entry(m))
    header = f"{'name':<8} {'k':>5} {'c':>6} {'lambda':>14} {'valid':>6}"
    lines = [header, "-" * len(header)]
    for e in entries:
        lines.append(
            f"{e['name']:<8} {e['k']:>5} {str(Fraction(e['c'])):>6} {e['lambda']:>14} "
            f"{'yes' if e['valid_descent'] else 'no':>6}"
        )
    lines += [f"FAIL {p}" for p in problems]
    _emit(args, entries, "\n".join(lines))
    if problems and args.format == "json":
        for p in problems:
            print(f"FAIL {p}", file=sys.stderr)
    return EXIT_FAIL if problems else EXIT_OK


def cmd_descend(args) -> int:
    m = descent.get_map(args.map)
    traj = descent.descend_sequence(m, args.a, args.b, args.max_steps)
    payload = {
        "map": traj.map_name,
        "k": traj.k,
        "steps": [{"a": a, "b": b, "form": v} for a, b, v in traj.steps],
        "termination": traj.termination.value,
    }
    lines = [f"{m.name}: a^2 - {m.k} b^2"]
    for i, (a, b, v) in enumerate(traj.steps):
        lines.append(f"{i:>4}  ({a}, {b})  form {v}")
    lines.append(f"stop: {traj.termination.value}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_figure(args, parser) -> int:
    vals = args.values
    try:
        if args.kind == "tri":
            if len(vals) != 3:
                parser.error("figure tri expects N A B")
            kind = constructions.triangular_kind(vals[0])
            a, b = vals[1:]
        else:
            if len(vals) != 2:
                parser.error(f"figure {args.kind} expects A B")
            kind = constructions.parse_kind(args.kind)
            a, b = vals
        fig = constructions.build_figure(kind, a, b, args.precision)
    except ValueError as e:
        parser.error(str(e))
    report = constructions.verify_figure(fig)
    svg = figure_to_svg(fig, RenderStyle())
    out = args.output
    if out is None or os.path.isdir(out):
        out = os.path.join(out or ".", svg_filename(fig))
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    payload = report.to_dict() | {"svg": out}
    lines = [f"{kind.name} a={a} b={b} -> {out}"]
    lines.append(f"  excess    {float(report.excess):.12g}")
    lines.append(f"  uncovered {float(report.uncovered):.12g}")
    for c in report.identities:
        lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {float(c.lhs):.12g} vs {float(c.rhs):.12g}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_survey(args) -> int:
    rows = analysis.run_survey(args.n_max)
    _emit(args, [r.to_dict() for r in rows], analysis.format_survey(rows))
    return EXIT_OK


def cmd_oracle(args) -> int:
    v = analysis.brute_force_no_solution(args.k, args.b_max)
    payload = {"k": v.k, "b_max": v.b_max, "no_solution": v.no_solution, "witness": list(v.witness) if v.witness else None}
    if v.no_solution:
        text = f"k={v.k}: no solution with 1 <= b <= {v.b_max}"
    else:
        text = f"k={v.k}: witness a={v.witness[0]}, b={v.witness[1]}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_pentagon_lemma(args) -> int:
    try:
        x = constructions.pentagon_lemma_side()
        chase = constructions.pentagon_angle_chase()
    except constructions.LemmaFailure as e:
        print(f"FAIL {e}", file=sys.stderr)
        return EXIT_FAIL
    ray_ok = constructions.pentagon_ray_check(args.precision).passed()
    payload = {
        "x": str(x),
        "angles": [{"label": lbl, "pi_multiple": f"{v.numerator}/{v.denominator}"} for lbl, v in chase],
        "ray_check": ray_ok,
    }
    lines = [f"x = {x}  (= a - 2b at b = 1, a = sqrt(5))"]
    lines += [f"  {lbl:<42} {v} pi" for lbl, v in chase]
    lines.append(f"clipped figure at (sqrt 5, 1): {'PASS' if ray_ok else 'FAIL'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ray_ok else EXIT_FAIL


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--precision", type=_positive, default=argparse.SUPPRESS, help="mantissa bits for geometry")

    p = argparse.ArgumentParser(prog="descentkit", parents=[common], description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-maps", parents=[common], help="check every catalog map's identities")
    s.add_argument("--triangular-max", type=int, default=8)

    s = sub.add_parser("descend", parents=[common], help="iterate a descent map")
    s.add_argument("map")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--max-steps", type=_positive, default=50)

    s = sub.add_parser("figure", parents=[common], help="write an SVG figure and verify it")
    s.add_argument("kind", choices=("sqrt2", "sqrt3", "sqrt5", "sqrt6", "tri"))
    s.add_argument("values", type=int, nargs="+", metavar="N/A/B")
    s.add_argument("-o", "--output")

    s = sub.add_parser("survey", parents=[common], help="triangular-number survey")
    s.add_argument("n_max", type=int)

    s = sub.add_parser("oracle", parents=[common], help="brute-force search for a^2 = k b^2")
    s.add_argument("k", type=_positive)
    s.add_argument("b_max", type=_positive)

    sub.add_parser("pentagon-lemma", parents=[common], help="exact pentagon side and angle lemmas")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.precision = getattr(args, "precision", DEFAULT_PRECISION)
    if args.precision < 53:
        parser.error("--precision must be at least 53 bits")
    try:
        if args.command == "verify-maps":
            return cmd_verify_maps(args)
        if args.command == "descend":
            try:
                descent.get_map(args.map)
            except (KeyError, ValueError) as e:
                parser.error(f"unknown or invalid map {args.map!r}: {e}")
            if args.a < 0 or args.b < 0:
                parser.error("a and b must be nonnegative")
            return cmd_descend(args)
        if args.command == "figure":
            return cmd_figure(args, parser)
        if args.command == "survey":
            if args.n_max < 2:
                parser.error("n_max must be >= 2")
            return cmd_survey(args)
        if args.command == "oracle":
            return cmd_oracle(args)
        return cmd_pentagon_lemma(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
