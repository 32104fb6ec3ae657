"""Command-line interface.

Commands:
  star        one symbolic power of a star configuration (JSON/CSV/SVG out)
  verify      full limit-simplex verification for a star configuration
  custom      the same pipeline for a point scheme loaded from JSON
  invariants  per-power invariant table only

Exit codes: 0 all checks passed, 1 computation or verdict failure, 2 usage
or input error.  All commands are deterministic functions of their flags
(given a fixed cache state or --no-cache).  The STARSHAPE_CACHE environment
variable supplies a default cache directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .errors import StarshapeError
from .gin import FileGinCache, GinCache, compute_gin, result_to_json
from .invariants import InvariantReport, custom_report, verify_theorem
from .linalg import format_rational, parse_rational
from .rng import SeededRng, mix64
from .scheme import build_star, load_points
from .shape import AxisSimplex, scaled, shape_of, staircase_svg, points_csv

CACHE_ENV = "STARSHAPE_CACHE"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starshape",
        description="Symbolic-power initial ideals of point configurations "
        "and their limiting staircase shapes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, star_args: bool) -> None:
        if star_args:
            p.add_argument("--n", type=int, required=True, help="ambient projective dimension")
            p.add_argument("--s", type=int, required=True, help="number of hyperplanes")
            p.add_argument("--mode", choices=("vandermonde", "seeded"), default="vandermonde")
        p.add_argument("--seed", type=int, default=0, help="64-bit master seed")
        p.add_argument("--coeff-bound", type=int, default=1000, dest="coeff_bound")
        p.add_argument("--json", dest="json_path", help="write a JSON report here")
        p.add_argument("--csv", dest="csv_path", help="write a CSV table here")
        p.add_argument("--svg", dest="svg_path", help="write an SVG rendering here (n=2)")
        p.add_argument("--cache", dest="cache_dir", help="result cache directory")
        p.add_argument("--no-cache", action="store_true", dest="no_cache")

    p_star = sub.add_parser("star", help="one symbolic power of a star configuration")
    common(p_star, star_args=True)
    p_star.add_argument("--m", type=int, required=True, help="symbolic power")

    p_verify = sub.add_parser("verify", help="verify the predicted limit simplex")
    common(p_verify, star_args=True)
    p_verify.add_argument("--m-max", type=int, required=True, dest="m_max")

    p_custom = sub.add_parser("custom", help="pipeline for a JSON point scheme")
    common(p_custom, star_args=False)
    p_custom.add_argument("--points", required=True, help="point scheme JSON file, or 'conic'")
    p_custom.add_argument("--m-max", type=int, required=True, dest="m_max")
    p_custom.add_argument(
        "--expect-vertices",
        dest="expect_vertices",
        help="comma-separated expected axis intercepts, e.g. '2,3'",
    )

    p_inv = sub.add_parser("invariants", help="per-power invariant tables only")
    common(p_inv, star_args=True)
    p_inv.add_argument("--m-max", type=int, required=True, dest="m_max")
    return parser


def _cache_from(args) -> GinCache | None:
    if args.no_cache:
        return None
    directory = args.cache_dir or os.environ.get(CACHE_ENV)
    if directory:
        return FileGinCache(directory)
    return None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit_json(path: str, doc: dict) -> None:
    _write(path, json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _report_csv(report: InvariantReport) -> str:
    n = report.n
    header = "m,alpha," + ",".join(f"t{i}" for i in range(1, n + 1)) + ",reg,colength"
    lines = [header]
    for row in report.rows:
        lines.append(
            f"{row.m},{row.alpha},"
            + ",".join(str(t) for t in row.t)
            + f",{row.reg},{row.colength}"
        )
    return "\n".join(lines) + "\n"


def _print_report(report: InvariantReport, out) -> None:
    n = report.n
    head = f"{'m':>3} {'alpha':>6} " + " ".join(f"{'t%d' % i:>4}" for i in range(1, n + 1))
    head += f" {'reg':>4} {'colength':>9}"
    print(head, file=out)
    for row in report.rows:
        line = f"{row.m:>3} {row.alpha:>6} " + " ".join(f"{t:>4}" for t in row.t)
        line += f" {row.reg:>4} {row.colength:>9}"
        print(line, file=out)
    print(
        "waldschmidt upper bound: "
        + format_rational(report.waldschmidt_min)
        + "   asymptotic regularity estimate: "
        + format_rational(report.asreg_estimate),
        file=out,
    )
    if report.areas is not None:
        print(
            "scaled complement areas: "
            + ", ".join(format_rational(a) for a in report.areas),
            file=out,
        )
    for name in sorted(report.verdicts):
        print(f"{name}: {'pass' if report.verdicts[name] else 'FAIL'}", file=out)


def _svg_for_report(report: InvariantReport) -> str:
    last = report.results[-1]
    return staircase_svg(scaled(shape_of(last), last.m), report.expected)


def _cmd_star(args, parser) -> int:
    if args.n < 1 or args.s < args.n:
        parser.error("need --s >= --n >= 1")
    if args.m < 1:
        parser.error("--m must be at least 1")
    cache = _cache_from(args)
    star_seed = SeededRng(mix64(args.seed)).derive(1).next_u64()
    gin_seed = SeededRng(args.seed).derive(2).next_u64()
    star = build_star(args.n, args.s, mode=args.mode, seed=star_seed, bound=args.coeff_bound)
    res = compute_gin(
        star.scheme(args.m), seed=gin_seed, bound=args.coeff_bound, cache=cache
    )
    doc = result_to_json(res)
    doc["mode"] = args.mode
    doc["s"] = args.s
    print(
        f"star(n={args.n}, s={args.s}) m={args.m}: "
        f"generators {[list(g) for g in res.artinian.generators]}, "
        f"t={res.t_vector()}, alpha={res.alpha()}, reg={res.regularity()}, "
        f"colength={res.colength}"
    )
    if args.json_path:
        _emit_json(args.json_path, doc)
    sh = scaled(shape_of(res), res.m)
    if args.csv_path:
        _write(args.csv_path, points_csv(sh))
    if args.svg_path:
        if args.n != 2:
            parser.error("--svg is only available for --n 2")
        _write(args.svg_path, staircase_svg(sh, AxisSimplex.star(args.n, args.s)))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.n < 1 or args.s < args.n:
        parser.error("need --s >= --n >= 1")
    if args.m_max < args.n:
        parser.error("--m-max must be at least --n (vertex hits need m = n)")
    report = verify_theorem(
        args.n,
        args.s,
        args.m_max,
        mode=args.mode,
        seed=args.seed,
        bound=args.coeff_bound,
        cache=_cache_from(args),
    )
    _print_report(report, sys.stdout)
    if args.json_path:
        _emit_json(args.json_path, report.to_json_dict())
    if args.csv_path:
        _write(args.csv_path, _report_csv(report))
    if args.svg_path:
        if args.n != 2:
            parser.error("--svg is only available for --n 2")
        _write(args.svg_path, _svg_for_report(report))
    return 0 if report.all_pass() else 1


def _resolve_points(value: str, parser):
    if value == "conic":
        with resources.as_file(
            resources.files("starshape.data").joinpath("conic.json")
        ) as path:
            return load_points(str(path))
    return load_points(value)


def _cmd_custom(args, parser) -> int:
    if args.m_max < 1:
        parser.error("--m-max must be at least 1")
    base = _resolve_points(args.points, parser)
    expect = None
    if args.expect_vertices:
        try:
            expect = [parse_rational(v) for v in args.expect_vertices.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            parser.error(f"bad --expect-vertices: {exc}")
    report = custom_report(
        base,
        args.m_max,
        expect_intercepts=expect,
        seed=args.seed,
        bound=args.coeff_bound,
        cache=_cache_from(args),
    )
    _print_report(report, sys.stdout)
    if args.json_path:
        _emit_json(args.json_path, report.to_json_dict())
    if args.csv_path:
        _write(args.csv_path, _report_csv(report))
    if args.svg_path:
        if report.n != 2:
            parser.error("--svg is only available for dimension-2 schemes")
        _write(args.svg_path, _svg_for_report(report))
    return 0 if report.all_pass() else 1


def _cmd_invariants(args, parser) -> int:
    if args.n < 1 or args.s < args.n:
        parser.error("need --s >= --n >= 1")
    if args.m_max < 1:
        parser.error("--m-max must be at least 1")
    star_seed = SeededRng(mix64(args.seed)).derive(1).next_u64()
    star = build_star(args.n, args.s, mode=args.mode, seed=star_seed, bound=args.coeff_bound)
    report = custom_report(
        star.scheme(1),
        args.m_max,
        seed=args.seed,
        bound=args.coeff_bound,
        cache=_cache_from(args),
    )
    report.s = args.s
    _print_report(report, sys.stdout)
    if args.json_path:
        _emit_json(args.json_path, report.to_json_dict())
    if args.csv_path:
        _write(args.csv_path, _report_csv(report))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "star": _cmd_star,
        "verify": _cmd_verify,
        "custom": _cmd_custom,
        "invariants": _cmd_invariants,
    }
    try:
        return handlers[args.command](args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return exc.code if isinstance(exc.code, int) else 2
    except StarshapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if not _is_input_error(exc) else 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _is_input_error(exc: StarshapeError) -> bool:
    from .errors import SchemeFormatError

    return isinstance(exc, SchemeFormatError)


if __name__ == "__main__":
    sys.exit(main())
