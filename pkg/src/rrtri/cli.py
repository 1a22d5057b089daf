"""Command-line entry point: ``rrtri {solve,verify,table1,torsion,near-eq,scan}``.

Exit codes: 0 solutions found (or every check passed), 1 nothing found up to
the bound (or a check failed), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from math import gcd
from typing import TextIO

from rrtri.curve import Component, SingularCurveError
from rrtri.search import (
    Records,
    SearchConfig,
    SolutionRecord,
    find_triangles,
    scan_range,
)
from rrtri.table1 import TABLE1, check_row, load_rows
from rrtri.torsion import torsion_deviations, torsion_subgroup
from rrtri.transform import DomainError, RatioTarget, curve_for, point_to_solution
from rrtri.triangle import (
    DegenerateTripleError,
    InvalidTriangleError,
    Triangle,
    angles_degrees,
    euler_distance_sq,
    is_valid_triangle,
    ratio,
    ratio_kind,
)

SCHEMA_VERSION = "1"
DEFAULT_EGG_BOUND = 20

EXIT_OK, EXIT_EMPTY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def qstr(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def record_to_json(rec: SolutionRecord, command: str, with_angles: bool = False) -> dict:
    sides = rec.triangle.sides if rec.triangle is not None else rec.representation
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "target_kind": rec.target.kind,
        "target": str(rec.target.value),
        "sides": [str(x) for x in sides],
        "ratio": qstr(ratio(*sides)),
        "u": qstr(rec.point.u),
        "v": qstr(rec.point.v),
        "component": rec.component.value,
        "provenance": rec.provenance,
        "residue_mod_8": rec.residue_mod_8,
    }
    if with_angles and rec.triangle is not None:
        out["angles"] = [round(a, 4) for a in angles_degrees(rec.triangle)]
    return out


class Output:
    """Writes to stdout and, optionally, to a file."""

    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.streams: list[TextIO] = [sys.stdout]
        self._file = open(path, "w") if path else None
        if self._file:
            self.streams.append(self._file)

    def line(self, text: str) -> None:
        for s in self.streams:
            s.write(text + "\n")

    def obj(self, d: dict) -> None:
        self.line(json.dumps(d, separators=(",", ":")))

    def close(self) -> None:
        if self._file:
            self._file.close()


def _format_record(rec: SolutionRecord, with_angles: bool = False) -> str:
    sides = rec.triangle.sides if rec.triangle is not None else rec.representation
    text = (f"{rec.target}  sides={','.join(map(str, sides))}  R/r={ratio(*sides)}  "
            f"u={rec.point.u}  {rec.component.value}  [{rec.provenance}]")
    if with_angles and rec.triangle is not None:
        text += "  angles=" + "/".join(f"{a:.2f}" for a in angles_degrees(rec.triangle))
    return text


def _emit_records(out: Output, recs: list[SolutionRecord], command: str, with_angles=False):
    for rec in recs:
        if out.fmt == "jsonl":
            out.obj(record_to_json(rec, command, with_angles))
        else:
            out.line(_format_record(rec, with_angles))


def _config(args) -> SearchConfig:
    try:
        return SearchConfig(args.denominator_bound, args.multiple_bound, args.time_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _target(kind: str, value: int) -> RatioTarget:
    try:
        return RatioTarget(kind, value)
    except SingularCurveError as exc:
        raise UsageError(f"{exc} (R/r = 2 only for the equilateral triangle 1,1,1)") from exc
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _summary(out: Output, command: str, target: RatioTarget, recs: Records, cfg: SearchConfig):
    n_tri = sum(1 for r in recs if r.triangle is not None)
    if out.fmt == "jsonl":
        out.obj({"schema_version": SCHEMA_VERSION, "command": command, "summary": True,
                 "target_kind": target.kind, "target": str(target.value), "triangles": n_tri,
                 "denominator_bound": cfg.denominator_bound,
                 "completed_bound": recs.completed_bound})
    elif n_tri == 0:
        out.line(f"no triangles up to bound {recs.completed_bound} for {target}")
    if recs.truncated:
        out.line(f"# time budget hit: searched up to {recs.completed_bound} of {recs.bound}")


def cmd_solve(args, out: Output) -> int:
    target = _target("N", args.n)
    cfg = _config(args)
    recs = find_triangles(target, cfg, egg_bound=args.egg_bound)
    _emit_records(out, recs, "solve")
    _summary(out, "solve", target, recs, cfg)
    return EXIT_OK if recs else EXIT_EMPTY


def verify_report(f: int, g: int, h: int) -> dict:
    rho = ratio(f, g, h)
    valid = is_valid_triangle(f, g, h)
    kind = ratio_kind(rho)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "sides": [str(f), str(g), str(h)],
        "ratio": qstr(rho),
        "valid_triangle": valid,
        "ratio_kind": kind[0] if kind else None,
        "target": str(kind[1]) if kind else None,
    }
    if valid:
        d = gcd3(f, g, h)
        tri = Triangle(f // d, g // d, h // d)
        report["angles"] = [round(a, 4) for a in angles_degrees(tri)]
        d2 = euler_distance_sq(tri)
        report["euler_d2_sign"] = "zero" if d2 == 0 else ("positive" if d2 > 0 else "negative")
    return report


def gcd3(f: int, g: int, h: int) -> int:
    return gcd(gcd(f, g), h)


def cmd_verify(args, out: Output) -> int:
    try:
        report = verify_report(args.f, args.g, args.h)
    except DegenerateTripleError as exc:
        raise UsageError(f"degenerate input: {exc}") from exc
    if out.fmt == "jsonl":
        out.obj(report)
    else:
        out.line(f"sides {args.f} {args.g} {args.h}")
        out.line(f"R/r = {Fraction(report['ratio'])}")
        out.line(f"valid triangle: {'yes' if report['valid_triangle'] else 'no'}")
        if report["valid_triangle"]:
            out.line("angles: " + ", ".join(f"{a:.2f}" for a in report["angles"]))
            out.line(f"Euler d^2: {report['euler_d2_sign']}")
        if report["ratio_kind"] == "N":
            out.line(f"R/r is the integer N = {report['target']}")
        elif report["ratio_kind"] == "M":
            out.line(f"R/r = 2 + 1/M with M = {report['target']}")
        else:
            out.line("R/r is neither an integer nor of the form 2 + 1/M")
    ok = report["valid_triangle"] and report["ratio_kind"] is not None
    return EXIT_OK if ok else EXIT_EMPTY


def cmd_table1(args, out: Output) -> int:
    try:
        rows = load_rows(args.path) if args.path else list(TABLE1)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    checks = [check_row(*row) for row in rows]
    if out.fmt == "csv":
        out.line("N,f,g,h,pass")
    for c in checks:
        if out.fmt == "csv":
            out.line(",".join(map(str, (c.n, *c.sides))) + f",{str(c.passed).lower()}")
        elif out.fmt == "jsonl":
            out.obj({"schema_version": SCHEMA_VERSION, "command": "table1", "target_kind": "N",
                     "target": str(c.n), "sides": [str(x) for x in c.sides],
                     "pass": c.passed, "residue_mod_8": c.residue_mod_8, "note": c.note})
        else:
            flag = "pass" if c.passed else "FAIL"
            note = f"  ({c.note})" if c.note else ""
            out.line(f"{c.n:>4}  {' '.join(map(str, c.sides))}  N mod 8 = {c.residue_mod_8}  {flag}{note}")
    passed = sum(c.passed for c in checks)
    odd = [c.n for c in checks if c.n != 2 and c.n % 8 != 2]
    if out.fmt == "table":
        out.line(f"{passed}/{len(checks)} rows pass")
        if odd:
            out.line(f"WARNING: N not 2 mod 8: {odd}")
    return EXIT_OK if passed == len(checks) else EXIT_EMPTY


def cmd_torsion(args, out: Output) -> int:
    target = _target("N", args.n) if args.n is not None else _target("M", args.m)
    curve = curve_for(target)
    report = torsion_subgroup(curve)
    warnings = torsion_deviations(curve, report)
    if out.fmt == "jsonl":
        out.obj({"schema_version": SCHEMA_VERSION, "command": "torsion",
                 "target_kind": target.kind, "target": str(target.value),
                 "structure": report.structure,
                 "points": [{"u": None if p.is_infinity else qstr(p.u),
                             "v": None if p.is_infinity else qstr(p.v), "order": k}
                            for p, k in report.points],
                 "warnings": warnings})
    else:
        out.line(f"{curve.label}: v^2 = u^3 + {curve.a2} u^2 + {curve.a4} u")
        out.line(f"torsion {report.structure}, {report.size} points")
        for p, k in report.points:
            where = "" if p.is_infinity or not curve.has_egg() else f"  {curve.component_of(p).value}"
            out.line(f"  order {k:>2}  {'oo' if p.is_infinity else f'({p.u}, {p.v})'}{where}")
        for w in warnings:
            out.line(f"WARNING: {w}")
        if warnings and target.kind == "M" and _isosceles_k(target.value):
            out.line(f"note: M = {target.value} = 2k^2 + 2k with k = {_isosceles_k(target.value)}, "
                     "where three points of order 2 are expected")
    return EXIT_OK


def _isosceles_k(m: int) -> int | None:
    k = 1
    while 2 * k * k + 2 * k < m:
        k += 1
    return k if 2 * k * k + 2 * k == m else None


def torsion_triangles(target: RatioTarget) -> Records:
    """Triangles carried by torsion points (only the M = 2k^2 + 2k family has any)."""
    curve = curve_for(target)
    out = Records()
    seen = set()
    for p, k in torsion_subgroup(curve).points:
        if p.is_infinity or p.u == 0 or k == 3:
            continue
        try:
            res = point_to_solution(target, p)
        except ValueError:
            continue
        if res.triangle is not None and res.triangle.sides not in seen:
            seen.add(res.triangle.sides)
            out.append(SolutionRecord(target, p, Component.EGG, "torsion", triangle=res.triangle))
    return out


def cmd_near_eq(args, out: Output) -> int:
    target = _target("M", args.m)
    rho = target.rho
    if args.sides:
        f, g, h = args.sides
        try:
            ok = is_valid_triangle(f, g, h) and ratio(f, g, h) == rho
        except DegenerateTripleError as exc:
            raise UsageError(f"degenerate input: {exc}") from exc
        report = {"schema_version": SCHEMA_VERSION, "command": "near-eq", "target_kind": "M",
                  "target": str(args.m), "sides": [str(x) for x in args.sides],
                  "ratio": qstr(ratio(f, g, h)), "pass": ok}
        if is_valid_triangle(f, g, h):
            d = gcd3(f, g, h)
            report["angles"] = [round(a, 4) for a in angles_degrees(Triangle(f // d, g // d, h // d))]
        if out.fmt == "jsonl":
            out.obj(report)
        else:
            out.line(f"sides {f} {g} {h}: R/r = {ratio(f, g, h)} "
                     f"({'matches' if ok else 'does not match'} 2 + 1/{args.m} = {rho})")
            if "angles" in report:
                out.line("angles: " + ", ".join(f"{a:.2f}" for a in report["angles"]))
        return EXIT_OK if ok else EXIT_EMPTY

    cfg = _config(args)
    if _isosceles_k(args.m) is not None:
        recs = torsion_triangles(target)
    else:
        recs = find_triangles(target, cfg, egg_bound=args.egg_bound)
    _emit_records(out, recs, "near-eq", with_angles=True)
    _summary(out, "near-eq", target, recs, cfg)
    return EXIT_OK if recs else EXIT_EMPTY


def cmd_scan(args, out: Output) -> int:
    if not 3 <= args.n_from <= args.n_to:
        raise UsageError(f"need 3 <= from <= to, got {args.n_from} {args.n_to}")
    cfg = _config(args)
    result = scan_range(args.n_from, args.n_to, cfg)
    _emit_records(out, result.records, "scan")
    hist = {str(k): v for k, v in sorted(result.residues.items())}
    if out.fmt == "jsonl":
        out.obj({"schema_version": SCHEMA_VERSION, "command": "scan", "summary": True,
                 "from": args.n_from, "to": args.n_to,
                 "denominator_bound": cfg.denominator_bound,
                 "triangle_ns": result.triangle_ns, "residue_histogram": hist,
                 "counterexamples_mod_8": result.counterexamples,
                 "truncated": result.truncated})
    else:
        ns = result.triangle_ns
        out.line(f"N with triangles in {args.n_from}..{args.n_to} (up to bound "
                 f"{cfg.denominator_bound}): {ns if ns else 'none'}")
        out.line(f"residues mod 8: {hist}")
    for n in result.counterexamples:
        out.line(f"WARNING: N = {n} has a triangle but N mod 8 = {n % 8}")
    return EXIT_OK if not result.counterexamples else EXIT_EMPTY


def _add_search_flags(p: argparse.ArgumentParser, egg: bool = True) -> None:
    p.add_argument("--denominator-bound", type=int, default=200,
                   help="max q in x = p/q for the quartic sieve (default 200)")
    p.add_argument("--multiple-bound", type=int, default=3,
                   help="max |n| in T + nP saturation (default 3)")
    p.add_argument("--time-budget", type=float, default=None,
                   help="soft limit in seconds, checked between denominators")
    if egg:
        p.add_argument("--egg-bound", type=int, default=DEFAULT_EGG_BOUND,
                       help=f"max e in u = m/e^2 for the egg sieve (default {DEFAULT_EGG_BOUND})")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "jsonl", "csv"), default="table")
    common.add_argument("--out", default=None, help="also write output to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rrtri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="search for triangles with R/r = N",
                       description="Search for integer triangles with R/r = N by sieving the "
                                   "quartic and the egg, then saturating with torsion and small "
                                   "multiples. Absence means 'none up to bound'. Large-side rows "
                                   "of the known table are checked with `table1`, not searched.")
    p.add_argument("n", type=int, metavar="N")
    _add_search_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="exact R/r of a side triple")
    p.add_argument("f", type=int)
    p.add_argument("g", type=int)
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", parents=[common], help="verify the table of known triangles")
    p.add_argument("path", nargs="?", default=None, help="file of 'N f g h' rows (default: built-in)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("torsion", parents=[common], help="torsion subgroup of E_N or F_M")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("near-eq", parents=[common], help="triangles with R/r = 2 + 1/M")
    p.add_argument("m", type=int, metavar="M")
    p.add_argument("--sides", type=int, nargs=3, metavar=("F", "G", "H"),
                   help="verify these sides instead of searching")
    _add_search_flags(p)
    p.set_defaults(func=cmd_near_eq)

    p = sub.add_parser("scan", parents=[common], help="quartic sieve over a range of N")
    p.add_argument("n_from", type=int, metavar="FROM")
    p.add_argument("n_to", type=int, metavar="TO")
    _add_search_flags(p, egg=False)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.format == "csv" and args.command != "table1":
        parser.error("--format csv is only available for table1")
    out = Output(args.format, args.out)
    try:
        return args.func(args, out)
    except (UsageError, InvalidTriangleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
