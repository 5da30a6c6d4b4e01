"""Command-line surface.

Subcommands: system, chambers, classify, boundary, symmetric, verify.
Output is JSON (schema-versioned) or SVG 1.1 on stdout (or --out FILE);
repeated runs with the same inputs produce byte-identical output.

Exit codes: 0 success, 2 usage or parameter error (with an error JSON on
stderr), 3 domain failure (classification walk hit its step cap).
The only environment knob is COXMOV_WORD_BUDGET, the global cap on
enumerated words (default 10^6).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, jsonio, svgplot, symmetric
from .atlas import (ClassificationError, boundary_patches, classify,
                    enumerate_chambers, fundamental_domain)
from .bir import BudgetError
from .coxeter import build_system

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class CommandError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _emit_error(message: str, code: int, **extra):
    payload = {"error": {"code": code, "message": message, **extra}}
    sys.stderr.write(json.dumps(payload) + "\n")


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build(n: int, m: int):
    try:
        return build_system(n, m, enforce_dimension_bound=True)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc


def _render_config(args) -> svgplot.RenderConfig:
    cfg = svgplot.RenderConfig()
    cfg.depth = getattr(args, "depth", cfg.depth)
    if getattr(args, "viewport", None):
        parts = [float(x) for x in args.viewport.split(",")]
        if len(parts) != 4:
            raise CommandError("viewport needs four comma-separated numbers")
        cfg.viewport = tuple(parts)
    if getattr(args, "palette", None):
        if args.palette not in svgplot.PALETTES:
            raise CommandError(f"unknown palette {args.palette!r}")
        cfg.palette = args.palette
    cfg.labels = bool(getattr(args, "labels", False))
    return cfg


def cmd_system(args) -> int:
    sys_ = _build(args.n, args.m)
    try:
        doc = jsonio.system_document(sys_)
    except ValueError as exc:
        raise CommandError(f"quadric unavailable: {exc}") from exc
    _write(jsonio.dumps(doc), args.out)
    return EXIT_OK


def cmd_chambers(args) -> int:
    sys_ = _build(args.n, args.m)
    try:
        chambers = enumerate_chambers(sys_, args.depth)
    except (ValueError, BudgetError) as exc:
        raise CommandError(str(exc)) from exc
    if args.format == "json":
        _write(jsonio.dumps(jsonio.chambers_document(sys_, args.depth, chambers)),
               args.out)
    else:
        if args.m != 3:
            raise CommandError("svg output needs m = 3")
        cfg = _render_config(args)
        _write(svgplot.render_chambers(sys_, chambers, cfg), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    sys_ = _build(args.n, args.m)
    try:
        coords = tuple(Fraction(part) for part in args.divisor.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise CommandError(f"malformed class string: {exc}") from exc
    if len(coords) != args.m:
        raise CommandError(f"expected {args.m} coordinates, got {len(coords)}")
    try:
        result = classify(sys_, coords, max_steps=args.max_steps)
    except ClassificationError as exc:
        _emit_error(f"classification failed: {exc}", EXIT_DOMAIN,
                    steps=exc.steps,
                    last_iterate=[str(x) for x in exc.last_iterate])
        return EXIT_DOMAIN
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    _write(jsonio.dumps(jsonio.classify_document(sys_, coords, result)),
           args.out)
    return EXIT_OK


def cmd_boundary(args) -> int:
    sys_ = _build(args.n, args.m)
    if args.n < 2:
        raise CommandError(
            "the boundary sampling is defined for n >= 2 only; the n = 1 "
            "systems accumulate differently and are not described here")
    try:
        patches = boundary_patches(sys_, args.depth)
    except (ValueError, BudgetError) as exc:
        raise CommandError(str(exc)) from exc
    if args.format == "json":
        _write(jsonio.dumps(jsonio.boundary_document(sys_, args.depth, patches)),
               args.out)
    else:
        if args.m != 3:
            raise CommandError("svg output needs m = 3")
        cfg = _render_config(args)
        _write(svgplot.render_boundary(sys_, fundamental_domain(sys_),
                                       patches, cfg), args.out)
    return EXIT_OK


def cmd_symmetric(args) -> int:
    base = symmetric.base_system()
    if args.depth < 0:
        raise CommandError("negative depth")
    if args.layer == "movable":
        items = symmetric.sym_enumerate(args.depth)
        if args.format == "json":
            _write(jsonio.dumps(jsonio.symmetric_document(args.depth,
                                                          "movable", items)),
                   args.out)
        else:
            cfg = _render_config(args)
            _write(svgplot.render_symmetric_movable(items, base, cfg), args.out)
    else:
        items = symmetric.psef_patches(args.depth)
        if args.format == "json":
            _write(jsonio.dumps(jsonio.symmetric_document(args.depth,
                                                          "psef", items)),
                   args.out)
        else:
            cfg = _render_config(args)
            _write(svgplot.render_symmetric_psef(items, base, cfg), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = checks.run_suites(args.suite, args.n, args.m)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    doc = jsonio.document("verify", {"suite": args.suite, "n": args.n,
                                     "m": args.m}, report)
    _write(jsonio.dumps(doc), args.out)
    return EXIT_OK if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxmov",
        description="Exact chamber geometry of movable cones for "
                    "Calabi-Yau complete intersections in products of "
                    "projective spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, depth_default=None):
        p.add_argument("--out", help="write output to a file instead of stdout")
        if depth_default is not None:
            p.add_argument("--depth", type=int, default=depth_default,
                           help="enumeration depth (reduced word length)")

    def add_nm(p):
        p.add_argument("--n", type=int, required=True,
                       help="dimension of each projective-space factor")
        p.add_argument("--m", type=int, required=True,
                       help="number of factors (the Picard rank)")

    def add_render(p):
        p.add_argument("--format", choices=("json", "svg"), default="json")
        p.add_argument("--viewport", help="svg viewport: x,y,width,height")
        p.add_argument("--palette", help="svg palette name")
        p.add_argument("--labels", action="store_true",
                       help="draw ray labels in svg output")

    p = sub.add_parser("system", help="Gram matrix, generators, quadric")
    add_nm(p)
    add_common(p)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("chambers", help="chamber tiling of the movable cone")
    add_nm(p)
    add_common(p, depth_default=4)
    add_render(p)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("classify", help="locate a divisor class in the tiling")
    add_nm(p)
    p.add_argument("--class", dest="divisor", required=True,
                   help="comma-separated exact rational coordinates")
    p.add_argument("--max-steps", type=int, default=1000)
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("boundary", help="boundary patches of the movable cone")
    add_nm(p)
    add_common(p, depth_default=2)
    add_render(p)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("symmetric", help="the symmetric (2, 3) case")
    p.add_argument("--layer", choices=("movable", "psef"), default="movable")
    add_common(p, depth_default=4)
    add_render(p)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("verify", help="run the exact property suites")
    p.add_argument("--suite", choices=checks.SUITE_NAMES + ("all",),
                   default="all")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _merge_class_flag(argv: list[str]) -> list[str]:
    # "--class -1,4,5" would be read as an unknown option by argparse;
    # fold the value into the flag so leading minus signs survive
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--class" and i + 1 < len(argv):
            out.append("--class=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_merge_class_flag(argv))
    try:
        return args.func(args)
    except CommandError as exc:
        _emit_error(str(exc), exc.code)
        return exc.code


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
