"""Command-line front end.

    carlitz-cdu table   --n 8 --table 1 [--jobs 4] [--format json]
    carlitz-cdu verify  --suite cdu5 --n 4-8
    carlitz-cdu compute --n 4 --gamma 0x2 --c all
    carlitz-cdu compute --n 4 --sbox inv4.txt --c 0x2

Exit status: 0 on success (all verdicts PASS), 1 if any verdict FAILs,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .carlitz import NotAPermutationError
from .field import ReducibleModulusError, make_field
from .scan import SUITES, ScanConfig, iter_verify, run_compute, run_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_degrees(text: str) -> list[int]:
    """``"6"``, ``"4-8"`` or ``"4,6,8"``."""
    out: list[int] = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        out.extend(range(int(lo), int(hi or lo) + 1))
    return out


def _hex(text: str) -> int:
    return int(text, 16)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="carlitz-cdu", description="c-differential uniformity of Carlitz-form permutations")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="reproduce a distribution table")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--modulus", type=_hex)
    t.add_argument("--table", type=int, choices=(1, 2, 3), default=1)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--early-exit", type=int, metavar="K", help="stop each scan once a count reaches K")
    t.add_argument("--allow-large", action="store_true", help="permit n above 12")

    v = sub.add_parser("verify", help="check closed-form claims against brute force")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--n", type=parse_degrees, required=True, help="degree, range 4-8 or list 4,6")
    v.add_argument("--modulus", type=_hex)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--all", action="store_true", help="print PASS lines too")

    c = sub.add_parser("compute", help="uniformity reports for one permutation")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--modulus", type=_hex)
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--gamma", type=_hex, help="use Inv o (0, 1, gamma)")
    src.add_argument("--coeffs", help="Carlitz coefficients a_0,...,a_{m+1} in hex")
    src.add_argument("--sbox", help="file with one hex value per line")
    c.add_argument("--c", default="all", help="hex element or 'all' (every c outside GF(2))")
    c.add_argument("--format", choices=("csv", "json"), default="json")
    c.add_argument("--early-exit", type=int, metavar="K")
    return p


def _cmd_table(args) -> int:
    cfg = ScanConfig(
        n=args.n,
        modulus=args.modulus,
        table_id=args.table,
        jobs=args.jobs,
        output_format=args.format,
        early_exit_threshold=args.early_exit,
        allow_large=args.allow_large,
    )
    res = run_table(cfg)
    sys.stdout.write(res.to_csv() if cfg.output_format == "csv" else res.to_json() + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    total = failed = 0
    for verdict in iter_verify(args.suite, args.n, args.modulus, args.jobs, args.seed):
        total += 1
        failed += not verdict.passed
        if args.all or not verdict.passed:
            print(verdict.line())
    print(f"# suite={args.suite} n={','.join(map(str, args.n))} verdicts={total} failed={failed}")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_compute(args) -> int:
    F = make_field(args.n, args.modulus)
    coeffs = [int(a, 16) for a in args.coeffs.split(",")] if args.coeffs else None
    reports = run_compute(F, coeffs=coeffs, gamma=args.gamma, sbox=args.sbox, c=args.c, threshold=args.early_exit)
    records = [r.to_record(F) for r in reports]
    if args.format == "json":
        print(json.dumps(records, indent=1))
    else:
        print("c,max_count,witness_a,witness_b,spectrum")
        for r in records:
            spec = " ".join(f"{k}:{v}" for k, v in r["spectrum"])
            print(f"{r['c']},{r['max_count']},{r['witness'][0]},{r['witness'][1]},{spec}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    handler = {"table": _cmd_table, "verify": _cmd_verify, "compute": _cmd_compute}[args.command]
    try:
        return handler(args)
    except (ReducibleModulusError, NotAPermutationError, ValueError, OSError) as exc:
        print(f"carlitz-cdu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
