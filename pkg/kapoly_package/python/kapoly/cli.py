"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Command-line front end.
#
#   kapoly compute --n N [--route R|all] [--format text|latex|json]
#   kapoly verify [--max-n K] [--oracle]
#   kapoly rm --n N [--method recursive|closed]
#   kapoly cache list|clear
#
# --n is the knot index n of C(2n, 4); the output is A_2n or P_2n.
# Exit codes: 0 success, 1 usage or I/O error, 2 a result that is not
# a clean polynomial, 3 a failed verification.
# ==================================================================

import argparse
import json
import sys
import traceback
from typing import List, Optional

from .config import load_config
from .errors import CacheConflict, IdentityFailure, KapolyError, NotPolynomial, RedundantFactor
from .knots.apoly import ROUTES, check_route_agreement, compute_routes
from .knots.riley_mednykh import rm_closed, rm_recursive
from .log import configure_logging, debug_stream_enabled, get_logger
from .render import FORMATS, RM_ORDER, render, render_json
from .routes import get_route
from .storage.cache import ResultCache

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_POLYNOMIAL = 2
EXIT_VERIFY = 3


class KapolyArgumentParser(argparse.ArgumentParser):
    """An ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _diagnostic(message: str):
    print(message, file=sys.stderr)


def _dump_failure(err: KapolyError):
    _diagnostic(f"error: {err}")
    residual = getattr(err, "residual", None)
    if residual is not None:
        _diagnostic("residual:")
        sys.stderr.write(render_json(residual))
    if debug_stream_enabled():
        traceback.print_exc()


def _write_output(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _compute_one(n: int, route: str, cache: Optional[ResultCache]):
    if cache is not None:
        record = cache.get(n, route)
        if record is not None:
            return record
    record = get_route(route).compute(n)
    if cache is not None:
        cache.put(record)
    return record


def cmd_compute(args, parser, config) -> int:
    if args.n == 0:
        parser.error("--n must be nonzero (the knot is C(2n, 4))")
    cache = None if args.no_cache else ResultCache(args.cache_dir or config["cache"]["directory"])
    try:
        if args.route == "all":
            records = compute_routes(args.n, ROUTES, parallel=config["compute"]["parallel_routes"])
            check_route_agreement(records)
            if cache is not None:
                for rec in records.values():
                    cache.put(rec)
            record = records[ROUTES[0]]
            _diagnostic(f"routes {', '.join(ROUTES)} agree, hash {record.hash}")
        else:
            record = _compute_one(args.n, args.route, cache)
    except (NotPolynomial, RedundantFactor, IdentityFailure) as e:
        _dump_failure(e)
        return EXIT_NOT_POLYNOMIAL
    except (CacheConflict, OSError) as e:
        _diagnostic(f"error: {e}")
        return EXIT_USAGE

    summary = record.summary()
    _diagnostic(f"A_{2 * args.n}: {summary['terms']} terms, L-degree {summary['deg_L']}, M-degree {summary['deg_M']}")
    try:
        _write_output(render(record.a, args.format), args.out)
    except OSError as e:
        _diagnostic(f"error: {e}")
        return EXIT_USAGE
    return EXIT_OK


def _run_suites(max_n: int, oracle: bool, config) -> List:
    # Imported here so that `compute` and `rm` do not load the golden files.
    from .knots import suites

    verify_cfg = config["verify"]
    parallel = config["compute"]["parallel_routes"]
    records = {}
    reports = [suites.golden_suite()]
    if not reports[0].passed:
        return reports
    reports.append(suites.q_identity_suite())
    reports.append(suites.specialization_suite(max_n, records=records))
    reports.append(suites.negative_suite(max_n, records=records))
    ns = [n for n in range(-max_n, max_n + 1) if n != 0]
    reports.append(suites.route_suite(ns, ROUTES, parallel=parallel))
    sym = verify_cfg["symmetry_range"]
    reports.append(suites.reciprocity_report([n for n in range(-sym, sym + 1) if n != 0], records=records))
    if oracle:
        reports.append(suites.oracle_suite(verify_cfg["oracle_n"], verify_cfg["longitude_n"]))
    return reports


def cmd_verify(args, parser, config) -> int:
    max_n = args.max_n if args.max_n is not None else config["verify"]["default_max_n"]
    if max_n < 2:
        parser.error("--max-n must be at least 2")
    try:
        reports = _run_suites(max_n, args.oracle, config)
    except KapolyError as e:
        _dump_failure(e)
        return EXIT_VERIFY
    passed = all(r.passed for r in reports)
    sys.stdout.write(json.dumps({"passed": passed, "max_n": max_n, "suites": [r.to_json_obj() for r in reports]}, indent=1) + "\n")
    if passed:
        _diagnostic("verify: all identities hold")
        return EXIT_OK
    for report in reports:
        failure = report.first_failure()
        if failure is not None:
            where = "" if failure.n is None else f" (n={failure.n})"
            _diagnostic(f"verify: {report.suite}: {failure.name}{where} failed")
            break
    return EXIT_VERIFY


def cmd_rm(args, parser, config) -> int:
    rm = rm_closed(args.n) if args.method == "closed" else rm_recursive(args.n)
    _diagnostic(f"P_{2 * args.n}: {len(rm.poly)} terms, x-degree {rm.degree_x()}")
    try:
        _write_output(render(rm.poly, args.format, order=RM_ORDER), args.out)
    except OSError as e:
        _diagnostic(f"error: {e}")
        return EXIT_USAGE
    return EXIT_OK


def cmd_cache(args, parser, config) -> int:
    cache = ResultCache(args.cache_dir or config["cache"]["directory"])
    try:
        if args.action == "clear":
            removed = cache.clear()
            _diagnostic(f"removed {removed} entries from {cache.directory}")
        else:
            for entry in cache.entries():
                print(f"{entry['n']:>4} {entry['route']:<16} {entry['terms']:>7} terms  {entry['hash'][:16] if entry['valid'] else 'invalid'}")
    except OSError as e:
        _diagnostic(f"error: {e}")
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> KapolyArgumentParser:
    parser = KapolyArgumentParser(
        prog="kapoly",
        description="A-polynomials A_2n(L, M) of the two-bridge knots C(2n, 4). --n is n, not 2n.",
    )
    parser.add_argument("--config", default=None, help="YAML file merged over the packaged defaults")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress at INFO level")
    sub = parser.add_subparsers(dest="command", parser_class=KapolyArgumentParser)
    sub.required = True

    p = sub.add_parser("compute", help="Compute A_2n(L, M)")
    p.add_argument("--n", type=int, required=True, help="Knot index n of C(2n, 4), nonzero")
    p.add_argument("--route", choices=list(ROUTES) + ["all"], default=None, help="Computation route (default from config)")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", default=None, help="Write the result here instead of stdout")
    p.add_argument("--cache-dir", default=None, help="Result cache directory (APOLY_CACHE_DIR wins)")
    p.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="Run the identity suites")
    p.add_argument("--max-n", type=int, default=None, help="Largest |n| checked, at least 2")
    p.add_argument("--oracle", action="store_true", help="Also run the representation oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rm", help="Print the Riley-Mednykh polynomial P_2n(M, x)")
    p.add_argument("--n", type=int, required=True, help="Knot index n")
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser("cache", help="Inspect or clear the result cache")
    p.add_argument("action", choices=("list", "clear"))
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
    except (FileNotFoundError, OSError) as e:
        _diagnostic(f"error: {e}")
        return EXIT_USAGE
    configure_logging("INFO" if args.verbose else config["logging"]["level"])
    if getattr(args, "route", "unset") is None:
        args.route = config["compute"]["default_route"]
    return args.func(args, parser, config)


if __name__ == "__main__":
    sys.exit(main())
