"""Command-line entry point.

Exit codes: 0 success, 1 failed verification or cross-check, 2 bad usage.
Data goes to stdout; progress and diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import formulas, oracle
from .bitcore import k_subset_masks, to_binary_string
from .enumeration import (
    PRUNED_MAX_N,
    SearchTooLarge,
    StopEnumeration,
    count_canonical,
    count_canonical_pruned,
    stream_representatives,
)
from .matrix import render, transpose


class UsageError(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _err(text: str) -> None:
    sys.stderr.write(text + "\n")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def cmd_masks(args) -> int:
    _require(1 <= args.n <= 62 and 0 <= args.k <= args.n, f"need 0 <= k <= n <= 62, got n={args.n}, k={args.k}")
    pool = k_subset_masks(args.n, args.k)
    if args.format == "json":
        _out(json.dumps(list(pool)))
    else:
        for m in pool:
            _out(f"{m} {to_binary_string(m, args.n)}")
    return 0


def cmd_count(args) -> int:
    _require(1 <= args.k <= args.n <= PRUNED_MAX_N, f"need 1 <= k <= n <= {PRUNED_MAX_N}")
    _require(args.jobs >= 1, "--jobs must be >= 1")
    if args.method == "baseline":
        try:
            report = count_canonical(args.n, args.k, force=args.force)
        except SearchTooLarge as exc:
            _err(f"baseline refused: predicted visits {exc.visits} exceed {exc.limit}; pass --force to run anyway")
            return 2
    else:
        report = count_canonical_pruned(args.n, args.k, jobs=args.jobs)
    if args.format == "json":
        _out(json.dumps(report.as_dict()))
    else:
        _out(f"n = {report.n}")
        _out(f"k = {report.k}")
        _out(f"mu = {report.mu}")
        _out(f"method = {report.method}")
        _out(f"tuples_visited = {report.tuples_visited}")
        _out(f"elapsed = {report.elapsed:.3f}")
    return 0


def _record(n: int, k: int, rows, index: int) -> dict:
    return {"n": n, "k": k, "rows": list(rows), "cols": list(transpose(rows)), "index": index}


def cmd_list(args) -> int:
    _require(1 <= args.k <= args.n <= PRUNED_MAX_N, f"need 1 <= k <= n <= {PRUNED_MAX_N}")
    _require(args.limit is None or args.limit >= 0, "--limit must be >= 0")
    if args.limit == 0:
        return 0
    collected = []
    index = 0

    def sink(rows):
        nonlocal index
        index += 1
        rec = _record(args.n, args.k, rows, index)
        if args.format == "jsonl":
            _out(json.dumps(rec))
        elif args.format == "json":
            collected.append(rec)
        else:
            _out(f"# {index}: rows {' '.join(map(str, rec['rows']))}; cols {' '.join(map(str, rec['cols']))}")
            sys.stdout.write(render(rows))
            _out()
        if args.limit is not None and index >= args.limit:
            raise StopEnumeration

    stream_representatives(args.n, args.k, sink)
    if args.format == "json":
        _out(json.dumps(collected))
    return 0


def cmd_lambda(args) -> int:
    _require(args.n >= 1, "n must be >= 1")
    if args.k not in (1, 2, 3):
        _err(f"no known formula for lambda(n, k) with k = {args.k}")
        return 2
    try:
        value = formulas.lambda_value(args.n, args.k, args.method)
    except formulas.RouteDisagreement as exc:
        _err(str(exc))
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _out(str(value))
    return 0


def cmd_verify(args) -> int:
    _require(1 <= args.k <= args.n <= oracle.ORACLE_MAX_N, f"verify needs 1 <= k <= n <= {oracle.ORACLE_MAX_N}")
    _err(f"verifying n={args.n} k={args.k} by brute force")
    part = oracle.orbit_partition(args.n, args.k)
    counts = oracle.verify_counts(args.n, args.k, part)
    unique = oracle.verify_canonical_uniqueness(args.n, args.k, part)
    lam = "n/a" if counts.lambda_formula is None else counts.lambda_formula
    _out(
        f"λ {counts.lambda_oracle}={lam}, μ {counts.mu_oracle}={counts.mu_enumeration}, "
        f"uniqueness {'holds' if unique.holds else 'FAILS'}"
    )
    for idx, members in unique.witnesses:
        shown = "; ".join(" ".join(map(str, t)) for t in members) or "none"
        _out(f"witness: class {idx + 1} has {len(members)} canonical members: {shown}")
    return 0 if counts.holds and unique.holds else 1


def _mu_table(max_n: int, jobs: int) -> dict[tuple[int, int], int]:
    cells = {}
    for n in range(2, max_n + 1):
        for k in range(1, n):
            _err(f"mu({n},{k}) ...")
            cells[n, k] = count_canonical_pruned(n, k, jobs=jobs).mu
    return cells


def cmd_table(args) -> int:
    _require(2 <= args.max_n <= 9, "--max-n must be in [2, 9]")
    _require(args.jobs >= 1, "--jobs must be >= 1")
    cells = _mu_table(args.max_n, args.jobs)
    ns = range(2, args.max_n + 1)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["k", "n", "mu"])
        for k in range(1, args.max_n):
            for n in ns:
                if (n, k) in cells:
                    w.writerow([k, n, cells[n, k]])
        return 0
    width = max(len(str(v)) for v in cells.values()) + 1
    _out("k\\n " + "".join(f"{n:>{width}}" for n in ns))
    for k in range(1, args.max_n):
        line = "".join(f"{cells[n, k]:>{width}}" if (n, k) in cells else " " * width for n in ns)
        _out((f"{k:<4}" + line).rstrip())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="canonmat",
        description="Canonical representatives of k-regular square binary matrices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("masks", help="list n-bit masks with k ones")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_masks)

    s = sub.add_parser("count", help="count canonical elements")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--method", choices=("baseline", "pruned"), default="pruned")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--force", action="store_true", help="run the baseline even when it is huge")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("list", help="print canonical elements in lexicographic order")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--format", choices=("text", "json", "jsonl"), default="text")
    s.add_argument("--limit", type=int, default=None)
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("lambda", help="evaluate lambda(n, k) exactly")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument(
        "--method",
        choices=("auto", "partition", "anand", "good-crook", "pi", "explicit"),
        default="auto",
    )
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("verify", help="brute-force check of counts and canonical uniqueness")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="triangular table of mu(n, k) for 1 <= k < n")
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _err(f"{parser.prog} {args.command}: error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
