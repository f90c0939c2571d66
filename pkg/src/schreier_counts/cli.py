"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .oracle import ENUMERATION_LIMIT, EnumerationLimitError
from .recurrence import schreier_char_poly
from .render import (POLY_FORMATS, SEQUENCE_FORMATS, TABLE_FORMATS, load_table_json,
                     render_poly, render_sequence, render_table)
from .sequences import ENGINES, compute_sequence
from .sets import INFINITY, SchreierError, as_finite_set, d_value, greedy_decompose
from .tables import SEQUENCE_LABELS, build_r_table
from .verify import CHECKS, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _finite_set(text: str) -> tuple[int, ...]:
    try:
        return as_finite_set(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad set {text!r}: {exc}")


def _check_list(text: str) -> list[str]:
    if text == "all":
        return list(CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}; choose from: all, {', '.join(CHECKS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schreier-counts",
        description="Count unions of at most k Schreier sets, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the r-table for one k")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--rows", type=_positive, default=16)
    p.add_argument("--format", choices=TABLE_FORMATS, default="pretty")

    p = sub.add_parser("seq", help="print the s, r0 or t sequence")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--which", choices=SEQUENCE_LABELS, default="s")
    p.add_argument("--count", type=_positive, default=16)
    p.add_argument("--format", choices=SEQUENCE_FORMATS, default="pretty")
    p.add_argument("--engine", choices=ENGINES, default="dp")
    p.add_argument("--limit", type=_positive, default=ENUMERATION_LIMIT,
                   help="largest n the brute engine will enumerate")
    p.add_argument("--jobs", type=_positive, default=1,
                   help="worker processes for the brute engine")

    p = sub.add_parser("verify", help="run cross-checks, exit 1 on any failure")
    p.add_argument("--k", type=_positive)
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--checks", type=_check_list, default=list(CHECKS))
    p.add_argument("--limit", type=_positive, default=ENUMERATION_LIMIT,
                   help="largest n the brute-force checks enumerate")
    p.add_argument("--table-file", help="verify this table (JSON as written by 'table --format json') "
                                        "instead of the computed one")

    p = sub.add_parser("poly", help="print the characteristic polynomial p_k")
    p.add_argument("--k", type=_nonnegative, required=True)
    p.add_argument("--format", choices=POLY_FORMATS, default="pretty")

    p = sub.add_parser("member", help="classify a set: membership, greedy blocks, d-value")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--set", dest="elements", type=_finite_set, required=True,
                   help="comma-separated increasing positive integers")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    return parser


def cmd_table(args, out) -> int:
    out.write(render_table(build_r_table(args.k, args.rows), args.format))
    return EXIT_OK


def cmd_seq(args, out) -> int:
    seq = compute_sequence(args.k, args.which, args.count, args.engine, args.limit, args.jobs)
    out.write(render_sequence(seq, args.format, args.k, args.engine))
    return EXIT_OK


def cmd_verify(args, out, parser) -> int:
    table = None
    k, max_n = args.k, args.max_n
    if args.table_file:
        try:
            with open(args.table_file, encoding="utf-8") as fh:
                table = load_table_json(fh.read())
        except (OSError, SchreierError) as exc:
            parser.error(f"cannot load table: {exc}")
        if k is not None and k != table.k:
            parser.error(f"--k {k} does not match the table's k={table.k}")
        k = table.k
        if max_n is None:
            max_n = table.N
        elif max_n > table.N:
            parser.error(f"--max-n {max_n} exceeds the table's {table.N} rows")
    if k is None:
        parser.error("verify needs --k (or --table-file)")
    if max_n is None:
        max_n = 18
    results = run_checks(k, max_n, args.checks, table, args.limit)
    for result in results:
        out.write(result.line() + "\n")
    return EXIT_FAIL if any(r.failed for r in results) else EXIT_OK


def cmd_poly(args, out) -> int:
    out.write(render_poly(schreier_char_poly(args.k), args.format))
    return EXIT_OK


def cmd_member(args, out) -> int:
    F, k = args.elements, args.k
    blocks = greedy_decompose(F)
    member = len(blocks) <= k
    d = d_value(F, k) if member else None
    if args.format == "json":
        out.write(json.dumps({
            "k": k,
            "set": list(F),
            "member": member,
            "blocks": [list(b) for b in blocks],
            "d": None if d is None else ("INFINITY" if d == INFINITY else d),
        }) + "\n")
        return EXIT_OK
    out.write(f"set: {{{','.join(map(str, F))}}}\n")
    out.write(f"k: {k}\n")
    out.write(f"member: {'yes' if member else 'no'}\n")
    out.write("blocks: " + "".join(f"[{','.join(map(str, b))}]" for b in blocks) + "\n")
    if member:
        out.write(f"d: {'INFINITY' if d == INFINITY else d}\n")
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "verify":
            return cmd_verify(args, out, parser)
        handler = {"table": cmd_table, "seq": cmd_seq, "poly": cmd_poly, "member": cmd_member}[args.command]
        return handler(args, out)
    except EnumerationLimitError as exc:
        print(f"schreier-counts: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
