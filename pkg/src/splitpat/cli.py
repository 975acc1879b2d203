"""Command-line front end.

Data goes to stdout, diagnostics to stderr, and all data output is
byte-for-byte deterministic for a given command line.  Exit codes: 0 for
success (or "avoids" for check), 1 when check finds a contained pattern or
a verification target fails, 2 for usage errors, 3 when a brute-force
request exceeds the exhaustive-search guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import (
    DEFAULT_SEARCH_LIMIT,
    SearchLimitError,
    avoider_count,
    avoider_count_by_peeling,
    brute_count,
    build_count_table,
    enumerate_avoiders,
)
from .perms import PATTERN_23_1, PATTERN_3_12, contains_split, parse_permutation
from .verify import TARGETS, run_target


def _fail_usage(message: str) -> int:
    print(f"splitpat: error: {message}", file=sys.stderr)
    return 2


def cmd_table(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= 100:
        return _fail_usage(f"--n-max must be in 1..100, got {args.n_max}")
    if args.r_max is not None and args.r_max < 0:
        return _fail_usage(f"--r-max must be nonnegative, got {args.r_max}")
    table = build_count_table(args.n_max)
    if args.format == "csv":
        sys.stdout.write(table.to_csv(r_max=args.r_max, n_min=1))
    else:
        print(table.to_json(r_max=args.r_max, n_min=1))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    if not 0 <= args.r <= args.n:
        return _fail_usage(f"need 0 <= r <= n, got r={args.r}, n={args.n}")
    if args.method == "formula":
        value = avoider_count(args.r, args.n)
    elif args.method == "corollary":
        if args.r < 1:
            return _fail_usage("--method corollary needs r >= 1")
        value = avoider_count_by_peeling(args.r, args.n)
    else:
        value = brute_count(args.r, args.n, limit=args.unsafe_n_max)
    print(value)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        w = parse_permutation(args.perm)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if not 0 <= args.r <= w.n:
        return _fail_usage(f"need 0 <= r <= n={w.n}, got r={args.r}")
    witness_3_12 = contains_split(w, PATTERN_3_12, args.r)
    witness_23_1 = contains_split(w, PATTERN_23_1, args.r)
    avoids = witness_3_12 is None and witness_23_1 is None
    print(
        json.dumps(
            {
                "avoids": avoids,
                "fiber_bundle": avoids,
                "witness_3_12": None if witness_3_12 is None else list(witness_3_12.indices),
                "witness_23_1": None if witness_23_1 is None else list(witness_23_1.indices),
            }
        )
    )
    return 0 if avoids else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 0 <= args.r <= args.n:
        return _fail_usage(f"need 0 <= r <= n, got r={args.r}, n={args.n}")
    members = enumerate_avoiders(args.r, args.n, limit=args.unsafe_n_max)
    if args.format == "lines":
        for w in members:
            print(w)
    else:
        print(json.dumps([str(w) for w in members]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 2:
        return _fail_usage(f"--order must be at least 2, got {args.order}")
    if args.n_max < 1:
        return _fail_usage(f"--n-max must be at least 1, got {args.n_max}")
    checks, residual = run_target(
        args.target, order=args.order, n_max=args.n_max, limit=args.unsafe_n_max
    )
    passed = sum(1 for c in checks if c.passed)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "target": args.target,
                    "order": args.order,
                    "n_max": args.n_max,
                    "all_passed": passed == len(checks),
                    "checks": [
                        {"key": c.key, "name": c.name, "passed": c.passed, "detail": c.detail}
                        for c in checks
                    ],
                    "boundary_residual": None if residual is None else residual._json_dict(),
                }
            )
        )
    else:
        for c in checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if c.detail:
                line += f" [{c.detail}]"
            print(line)
        print(f"summary: {passed}/{len(checks)} checks passed")
    return 0 if passed == len(checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitpat",
        description="Split-pattern avoidance: exact counts, checks and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the table of avoidance counts")
    p.add_argument("--n-max", type=int, required=True, help="largest permutation size (1..100)")
    p.add_argument("--r-max", type=int, default=None, help="only print rows with r <= R_MAX")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", help="count the avoiders for one (r, n)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "corollary", "brute"), default="formula")
    p.add_argument(
        "--unsafe-n-max",
        type=int,
        default=DEFAULT_SEARCH_LIMIT,
        help="override the exhaustive-search guard",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", help="test one permutation at one position")
    p.add_argument("--perm", type=str, required=True, help='compact ("315642") or comma form')
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list the avoiders in lexicographic order")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.add_argument("--unsafe-n-max", type=int, default=DEFAULT_SEARCH_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--target", choices=TARGETS, required=True)
    p.add_argument("--order", type=int, default=12, help="series window order (>= 2)")
    p.add_argument("--n-max", type=int, default=7, help="largest size for exhaustive targets")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--unsafe-n-max", type=int, default=DEFAULT_SEARCH_LIMIT)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SearchLimitError as exc:
        print(f"splitpat: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
