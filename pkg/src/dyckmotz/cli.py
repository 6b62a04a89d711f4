"""Command line front end.

Subcommands mirror the library layers: enumerate families, map paths
through the bijection, count pattern occurrences, check transport rules,
print distribution and popularity series, run the verification campaign,
and fetch sequence b-files. Global flags may appear before or after the
subcommand. Exit status: 0 success, 1 a check or fetch failed, 2 bad
usage or bad input data.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bijection import (
    LengthBeyondTableBoundError,
    NotConstrainedError,
    phi,
    phi_inverse,
)
from .enumeration import enumerate_constrained, enumerate_dyck, enumerate_motzkin
from .genfun import (
    DEFAULT_TRUNCATION,
    FIXED_POINT_PATTERNS,
    PATTERNS,
    distribution_brute_force,
    distribution_gf_closed,
    distribution_gf_fixed_point,
    popularity_gf,
)
from .oeis import MalformedBFileError, NetworkUnavailableError, oeis_fetch
from .paths import PathSyntaxError
from .patterns import (
    PatternSyntaxError,
    check_transport,
    count_occurrences,
    parse_pattern,
    transport_rule,
    transport_rules,
)
from .verifier import embedded_prefixes, render_text, run_full_verification

_FAMILIES = {
    "motzkin": enumerate_motzkin,
    "dyck": enumerate_dyck,
    "constrained": enumerate_constrained,
}


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--format", choices=("text", "csv", "json"),
                   default=argparse.SUPPRESS, help="output format")
    g.add_argument("--max-n", type=int, metavar="N",
                   default=argparse.SUPPRESS,
                   help="size bound (meaning depends on the subcommand)")
    g.add_argument("--seed-tables", metavar="FILE", default=argparse.SUPPRESS,
                   help="alternate golden reference file for verify")
    g.add_argument("--oeis-cache", metavar="DIR", default=argparse.SUPPRESS,
                   help="b-file cache directory "
                        "(default $DYCKMOTZ_OEIS_CACHE or ~/.cache/dyckmotz/oeis)")
    g.add_argument("--offline", action="store_true", default=argparse.SUPPRESS,
                   help="never touch the network; use cache or packaged terms")
    return p


def build_parser() -> argparse.ArgumentParser:
    # every attach point gets its own parent instance: set_defaults below
    # mutates action objects, and sharing one parent would leak the root
    # defaults into the subparsers, clobbering flags given up front
    parser = argparse.ArgumentParser(
        prog="dyckmotz",
        description="height-coupled Dyck paths, their Motzkin bijection, "
                    "and pattern statistics",
        parents=[_global_flags()])
    parser.set_defaults(format="text", max_n=None, seed_tables=None,
                        oeis_cache=None, offline=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[_global_flags()],
                       help="list all paths of one size")
    p.add_argument("--family", choices=sorted(_FAMILIES), default="constrained")
    p.add_argument("--n", type=int, required=True, help="semilength or length")

    p = sub.add_parser("map", parents=[_global_flags()],
                       help="apply the bijection (or its inverse) to paths")
    p.add_argument("--direction", choices=("forward", "inverse"),
                   default="forward")
    p.add_argument("paths", nargs="*",
                   help="path words; reads stdin lines when omitted")

    p = sub.add_parser("count", parents=[_global_flags()],
                       help="count occurrences of a pattern in one path")
    p.add_argument("--pattern", required=True)
    p.add_argument("--path", required=True)

    p = sub.add_parser("check-transport", parents=[_global_flags()],
                       help="test transport rules exhaustively (default n<=10)")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--rule", help="rule name, e.g. UD or ^UU")
    grp.add_argument("--all", action="store_true", dest="all_rules")

    p = sub.add_parser("gf", parents=[_global_flags()],
                       help="distribution series rows n,k,count (default n<=12)")
    p.add_argument("--pattern", required=True, choices=PATTERNS)
    p.add_argument("--method", choices=("closed", "fixed", "brute", "all"),
                   default="closed")

    p = sub.add_parser("popularity", parents=[_global_flags()],
                       help="total occurrences over the family (default n<=12)")
    p.add_argument("--pattern", required=True, choices=PATTERNS)

    sub.add_parser("verify", parents=[_global_flags()],
                   help="run the full verification campaign (default n<=12)")

    p = sub.add_parser("oeis-fetch", parents=[_global_flags()],
                       help="fetch and cache one sequence b-file")
    p.add_argument("oeis_id", metavar="ID", help="sequence id, e.g. A001006")
    p.add_argument("--refresh", action="store_true",
                   help="redownload even if cached")
    return parser


def _cache_dir(args) -> str:
    return (args.oeis_cache
            or os.environ.get("DYCKMOTZ_OEIS_CACHE")
            or os.path.expanduser("~/.cache/dyckmotz/oeis"))


def _emit_rows(args, header, rows):
    # rows: list of tuples, all plain scalars
    if args.format == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=2))
    elif args.format == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(str(v) for v in r))
    else:
        for r in rows:
            print(" ".join(str(v) for v in r))


def _cmd_enumerate(args) -> int:
    gen = _FAMILIES[args.family](args.n)
    if args.format == "json":
        print(json.dumps([str(p) for p in gen], indent=2))
    elif args.format == "csv":
        print("index,path")
        for i, p in enumerate(gen):
            print(f"{i},{p}")
    else:
        for p in gen:
            print(p)
    return 0


def _cmd_map(args) -> int:
    words = args.paths or [ln.strip() for ln in sys.stdin if ln.strip()]
    apply = phi if args.direction == "forward" else phi_inverse
    rows = [(w, str(apply(w))) for w in words]
    _emit_rows(args, ("input", "image"),
               rows if args.format != "text" else [(img,) for _, img in rows])
    return 0


def _cmd_count(args) -> int:
    expr = parse_pattern(args.pattern)
    value = count_occurrences(args.path, expr)
    if args.format == "json":
        print(json.dumps({"pattern": args.pattern, "path": args.path,
                          "count": value}))
    else:
        print(value)
    return 0


def _cmd_check_transport(args) -> int:
    max_n = args.max_n if args.max_n is not None else 10
    rules = transport_rules() if args.all_rules else [transport_rule(args.rule)]
    failed = False
    for rule in rules:
        counterexample = None
        total = 0
        for n in range(rule.min_n, max_n + 1):
            result = check_transport(rule, n)
            total += result["checked"]
            if not result["ok"]:
                counterexample = result["counterexample"]
                break
        if counterexample is None:
            print(f"ok    {rule.name:<4} = {rule.motzkin_side.text}  "
                  f"({total} paths, n={rule.min_n}..{max_n})")
        else:
            failed = True
            print(f"FAIL  {rule.name:<4} at {counterexample['path']} -> "
                  f"{counterexample['image']}: "
                  f"{counterexample['lhs']} != {counterexample['rhs']}")
    return 1 if failed else 0


def _series_for(pattern: str, method: str, max_n: int):
    if method == "closed":
        return distribution_gf_closed(pattern, max_n)
    if method == "brute":
        return distribution_brute_force(pattern, max_n)
    return distribution_gf_fixed_point(pattern, max_n)


def _cmd_gf(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_TRUNCATION // 2
    if args.method == "fixed" and args.pattern not in FIXED_POINT_PATTERNS:
        print(f"no fixed-point system for {args.pattern}; "
              f"have: {', '.join(FIXED_POINT_PATTERNS)}", file=sys.stderr)
        return 2
    if args.method == "all":
        methods = ["closed", "brute"]
        if args.pattern in FIXED_POINT_PATTERNS:
            methods.append("fixed")
        series = [_series_for(args.pattern, m, max_n).series for m in methods]
        if any(s != series[0] for s in series[1:]):
            print(f"routes disagree for {args.pattern}", file=sys.stderr)
            return 1
        result = series[0]
        print(f"# routes agree: {', '.join(methods)}")
    else:
        result = _series_for(args.pattern, args.method, max_n).series
    if args.format == "text":
        print(result.dump())
    else:
        rows = [(n, k, c)
                for n in range(max_n + 1)
                for k, c in enumerate(result.y_poly(n))]
        _emit_rows(args, ("n", "k", "count"), rows)
    return 0


def _cmd_popularity(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_TRUNCATION // 2
    series = popularity_gf(args.pattern, max_n)
    values = [(n, series.coefficient(n)) for n in range(1, max_n + 1)]
    if args.format == "text":
        print(", ".join(str(v) for _, v in values))
    else:
        _emit_rows(args, ("n", "value"), values)
    return 0


def _cmd_verify(args) -> int:
    max_n = args.max_n if args.max_n is not None else 12
    cache = args.oeis_cache or os.environ.get("DYCKMOTZ_OEIS_CACHE")
    report = run_full_verification(max_n=max_n, seed_tables=args.seed_tables,
                                   oeis_cache_dir=cache)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0 if report["ok"] else 1


def _cmd_oeis_fetch(args) -> int:
    embedded = embedded_prefixes() if args.offline else None
    offset, terms = oeis_fetch(args.oeis_id, cache_dir=_cache_dir(args),
                               offline=args.offline, refresh=args.refresh,
                               embedded=embedded)
    rows = [(offset + i, t) for i, t in enumerate(terms)]
    _emit_rows(args, ("n", "value"), rows)
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "count": _cmd_count,
    "check-transport": _cmd_check_transport,
    "gf": _cmd_gf,
    "popularity": _cmd_popularity,
    "verify": _cmd_verify,
    "oeis-fetch": _cmd_oeis_fetch,
}

_INPUT_ERRORS = (PathSyntaxError, PatternSyntaxError, NotConstrainedError,
                 LengthBeyondTableBoundError, KeyError, ValueError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (NetworkUnavailableError, MalformedBFileError, FileNotFoundError) as exc:
        print(f"dyckmotz: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"dyckmotz: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
