"""Command line front end.

Parses a blowup vector, reduces it, and reports reduction, nonexistence,
bound, or the full census as a table or JSON, optionally rendering each
class to an SVG file.  Exit codes: 0 success (a count of zero is a
success), 2 usage or validation error, 3 "not a blowup class".
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .blowup import (
    BlowupVector,
    NotBlowupClassError,
    derived_params,
    format_vector,
    reduce,
)
from .census import CensusResult, run_census, trapezoid_seeds
from .lattice import format_rational
from .polygon import DelzantPolygon, edge_profile

_TOKEN_RE = re.compile(r"^[+-]?(\d+(\.\d+)?|\.\d+|\d+/\d+)$")


class VectorSyntaxError(ValueError):
    """Malformed vector string; message carries the offending position."""


def _parse_token(token: str, position: str) -> Fraction:
    text = token.strip()
    if not _TOKEN_RE.match(text):
        raise VectorSyntaxError(
            f"{position}: {token.strip()!r} is not a rational ('p/q', integer, or exact decimal)"
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise VectorSyntaxError(f"{position}: zero denominator in {text!r}") from None


def parse_vector(s: str) -> BlowupVector:
    """Parse "lam; d1, d2, ..." with rational or exact-decimal tokens."""
    parts = s.split(";")
    if len(parts) != 2:
        raise VectorSyntaxError("expected exactly one ';' separating lambda from the deltas")
    lam = _parse_token(parts[0], "lambda")
    delta_tokens = parts[1].split(",")
    if len(delta_tokens) < 3:
        raise VectorSyntaxError(f"need k >= 3 blowup sizes, got {len(delta_tokens)}")
    deltas = tuple(
        _parse_token(tok, f"delta_{i}") for i, tok in enumerate(delta_tokens, start=1)
    )
    try:
        return BlowupVector(lam, deltas)
    except ValueError as exc:
        raise VectorSyntaxError(str(exc)) from exc


def _rat(x: Fraction) -> str:
    return format_rational(x)


def _json_point(p) -> list[str]:
    return [_rat(p[0]), _rat(p[1])]


def _json_profile(profile) -> list[list]:
    return [[k, _rat(a)] for k, a in profile]


def _class_entry(cls) -> dict:
    return {
        "profile": _json_profile(cls.canonical),
        "vertices": [_json_point(v) for v in cls.representative.vertices],
        "provenance": {
            "ell": cls.seed_ell,
            "chops": [
                {"vertex": _json_point(rec.vertex), "size": _rat(rec.size)} for rec in cls.chops
            ],
        },
    }


def emit_json(result: CensusResult, mode: str, raw_input: str) -> str:
    """Stable JSON document; rationals are "p/q" strings, never floats."""
    doc: dict = {
        "input": raw_input,
        "reduced_vector": format_vector(result.vector),
        "params": {
            "delta": _rat(result.params.delta),
            "a": _rat(result.params.a),
            "b": _rat(result.params.b),
        },
    }
    if mode in ("check", "bound", "census"):
        doc["nonexistence"] = {
            "verdict": result.nonexistence.verdict,
            "reason": result.nonexistence.reason,
        }
    if mode in ("bound", "census"):
        doc["bound"] = {
            "value": result.bound_report.bound,
            "conditions": list(result.bound_report.conditions),
            "attained": result.bound_report.attained,
        }
    if mode == "census":
        doc["count"] = result.count
        doc["classes"] = [_class_entry(c) for c in result.classes]
    return json.dumps(doc, indent=2) + "\n"


def _profile_str(profile) -> str:
    return "[" + ", ".join(f"({k}, {_rat(a)})" for k, a in profile) + "]"


def _point_str(p) -> str:
    return f"({_rat(p[0])}, {_rat(p[1])})"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def emit_table(result: CensusResult, mode: str, raw_input: str) -> str:
    lines = [
        f"input: {raw_input}",
        f"reduced: {format_vector(result.vector)}",
        f"params: delta={_rat(result.params.delta)} a={_rat(result.params.a)} b={_rat(result.params.b)}",
    ]
    if mode in ("check", "bound", "census"):
        lines.append(f"nonexistence: {result.nonexistence.verdict}")
        if result.nonexistence.reason:
            lines.append(f"  reason: {result.nonexistence.reason}")
    if mode in ("bound", "census"):
        br = result.bound_report
        i, ii, iii, iv = br.conditions
        lines.append(
            f"bound: {br.bound} conditions: i={_yes(i)} ii={_yes(ii)} iii={_yes(iii)}"
            f" iv={_yes(iv)} attained={_yes(br.attained)}"
        )
    if mode == "census":
        lines.append(f"count: {result.count} (mirror-inclusive: {result.mirror_inclusive_count})")
        for idx, cls in enumerate(result.classes):
            lines.append(f"class {idx}:")
            lines.append(f"  profile: {_profile_str(cls.canonical)}")
            lines.append("  vertices: " + " ".join(_point_str(v) for v in cls.representative.vertices))
            chops = "; ".join(f"{_point_str(r.vertex)} size {_rat(r.size)}" for r in cls.chops)
            lines.append(f"  seed: l={cls.seed_ell}")
            lines.append(f"  chops: {chops}")
    return "\n".join(lines) + "\n"


def _emit_seed_list(v: BlowupVector, fmt: str, raw_input: str) -> str:
    params = derived_params(v)
    seeds = trapezoid_seeds(params)
    if fmt == "json":
        doc = {
            "input": raw_input,
            "reduced_vector": format_vector(v),
            "params": {"delta": _rat(params.delta), "a": _rat(params.a), "b": _rat(params.b)},
            "seeds": [
                {
                    "ell": s.ell,
                    "vertices": [_json_point(p) for p in s.polygon.vertices],
                    "profile": _json_profile(edge_profile(s.polygon)),
                }
                for s in seeds
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [
        f"input: {raw_input}",
        f"reduced: {format_vector(v)}",
        f"params: delta={_rat(params.delta)} a={_rat(params.a)} b={_rat(params.b)}",
        f"seeds: {len(seeds)}",
    ]
    for s in seeds:
        verts = " ".join(_point_str(p) for p in s.polygon.vertices)
        lines.append(f"seed l={s.ell}: vertices {verts}")
        lines.append(f"  profile: {_profile_str(edge_profile(s.polygon))}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricensus",
        description="Count torus actions on blowups of the projective plane: "
        "reduce a blowup vector, check nonexistence, bound the count, or run the full census.",
    )
    parser.add_argument("vector", help="blowup vector, e.g. '1; 1/3, 1/3, 1/9'")
    parser.add_argument(
        "--mode",
        choices=("reduce", "check", "bound", "census"),
        default="census",
        help="how much to compute (default: census; each mode includes the previous ones)",
    )
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--svg-dir", metavar="PATH", help="render each census class to PATH/class-NNN.svg")
    parser.add_argument("--jobs", type=int, default=1, metavar="N", help="parallel workers for the census search")
    parser.add_argument(
        "--single-order",
        action="store_true",
        help="restrict the census to the written chop order and report any discrepancy "
        "against the all-orders search",
    )
    parser.add_argument("--seed-list", action="store_true", help="print the trapezoid seeds and exit")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.mode != "census" and (args.svg_dir or args.single_order):
        parser.error("--svg-dir and --single-order apply only to --mode census")
    if args.seed_list and (args.svg_dir or args.single_order):
        parser.error("--seed-list cannot be combined with --svg-dir or --single-order")

    try:
        given = parse_vector(args.vector)
    except VectorSyntaxError as exc:
        parser.error(str(exc))

    try:
        reduced = reduce(given)
    except NotBlowupClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if args.seed_list:
        sys.stdout.write(_emit_seed_list(reduced, args.format, args.vector))
        return 0

    if args.mode == "census":
        result = run_census(reduced, single_order=args.single_order, jobs=args.jobs)
        if args.single_order:
            full = run_census(reduced, jobs=args.jobs)
            ours = {c.canonical for c in result.classes}
            theirs = {c.canonical for c in full.classes}
            if ours == theirs:
                print("order-audit: single-order search agrees with all-orders search", file=sys.stderr)
            else:
                print(
                    f"order-audit: DISCREPANCY single-order={len(ours)} all-orders={len(theirs)}",
                    file=sys.stderr,
                )
    else:
        # the cheaper modes reuse the census result container with no classes
        from .blowup import bound_report, nonexistence_check

        result = CensusResult(
            vector=reduced,
            params=derived_params(reduced),
            nonexistence=nonexistence_check(reduced),
            bound_report=bound_report(reduced),
            classes=(),
        )

    emit = emit_json if args.format == "json" else emit_table
    sys.stdout.write(emit(result, args.mode, args.vector))

    if args.mode == "census" and args.svg_dir:
        from .render import render_census_classes

        paths = render_census_classes(result.classes, args.svg_dir)
        print(f"svg: wrote {len(paths)} file(s) to {args.svg_dir}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
