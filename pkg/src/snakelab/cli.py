"""Command-line verification harness and table emitter.

Subcommands:

  verify [--all | --check ID] [--n K] [--format text|json]
      Run identity checks.  Exit status is the number of failing checks
      (capped at 125); unknown ids and bad usage exit with 126.
  compute OBJECT --n K [--format text|json|csv]
      Print Q, R, B (polynomials), E, S (integers) or Eq (q-polynomials)
      for indices 0..K in canonical order, byte-for-byte deterministic.
  list-checks
      Print the catalog of check ids with default ceilings.

The environment variable SNAKELAB_THREADS caps the size of the worker pool
used by `verify` (default 1, i.e. sequential); results are collected and
printed in catalog order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from snakelab import checks as checklib
from snakelab import eulerians, permstats
from snakelab.checks import CheckResult

USAGE_EXIT = 126
MAX_FAILURE_EXIT = 125

COMPUTE_OBJECTS = ("Q", "R", "B", "E", "Eq", "S")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> _Parser:
    parser = _Parser(prog="snakelab")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="run every check")
    group.add_argument("--check", metavar="ID", help="run one check by id")
    verify.add_argument("--n", type=int, default=None, metavar="K",
                        help="override the size ceiling")
    verify.add_argument("--format", choices=("text", "json"), default="text")

    compute = sub.add_parser("compute", help="print a table of objects")
    compute.add_argument("object", choices=COMPUTE_OBJECTS)
    compute.add_argument("--n", type=int, required=True, metavar="K",
                         help="largest index")
    compute.add_argument("--format", choices=("text", "json", "csv"),
                         default="text")

    sub.add_parser("list-checks", help="print the check catalog")
    return parser


def _row_value(obj: str, n: int):
    if obj == "Q":
        return str(eulerians.Q_poly(n))
    if obj == "R":
        return str(eulerians.R_poly(n))
    if obj == "B":
        return str(permstats.signed_enumerator(n, "B", "FULL_YTQ"))
    if obj == "E":
        return eulerians.euler_number(n)
    if obj == "Eq":
        return str(eulerians.q_euler(n))
    if obj == "S":
        return eulerians.springer_number(n)
    raise ValueError(f"unknown object {obj!r}")


def _row_label(obj: str, n: int) -> str:
    if obj == "Eq":
        return f"E_{n}(q)"
    return f"{obj}_{n}"


def emit_table(obj: str, n_max: int, fmt: str) -> str:
    """Render objects 0..n_max; identical inputs give identical bytes."""
    if n_max < 0:
        raise ValueError("n must be >= 0")
    rows = [(n, _row_value(obj, n)) for n in range(n_max + 1)]
    if fmt == "csv":
        return "\n".join(f"{n},{value}" for n, value in rows)
    if fmt == "json":
        return json.dumps(
            {"object": obj, "rows": [[n, value] for n, value in rows]},
            sort_keys=True,
            separators=(",", ":"),
        )
    return "\n".join(f"{_row_label(obj, n)} = {value}" for n, value in rows)


def _thread_cap() -> int:
    raw = os.environ.get("SNAKELAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_many(ids: Sequence[str], n_max: int | None) -> list[CheckResult]:
    cap = min(_thread_cap(), max(1, len(ids)))
    if cap == 1:
        return [checklib.run_check(check_id, n_max) for check_id in ids]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        futures = {check_id: pool.submit(checklib.run_check, check_id, n_max)
                   for check_id in ids}
    return [futures[check_id].result() for check_id in ids]


def _print_results(results: list[CheckResult], fmt: str, out: Callable[[str], None]) -> int:
    failures = sum(1 for r in results if r.status == "fail")
    if fmt == "json":
        payload = {
            "checks": [
                {
                    "id": r.id,
                    "n": r.n_max,
                    "status": r.status,
                    "witness": r.witness,
                    "note": r.note,
                }
                for r in results
            ],
            "failures": failures,
        }
        out(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return failures
    for r in results:
        out(f"{r.status:<5}  {r.id}  (n <= {r.n_max})")
        if r.witness:
            out(f"       counterexample: {r.witness}")
        if r.note:
            out(f"       note: {r.note}")
    passed = sum(1 for r in results if r.status == "pass")
    skipped = sum(1 for r in results if r.status == "skipped")
    tail = f", {skipped} skipped" if skipped else ""
    out(f"{len(results)} checks: {passed} passed, {failures} failed{tail}")
    return failures


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse help or usage error
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT

    if args.command == "list-checks":
        for check in checklib.CHECKS:
            ceiling = f"n<={check.default_n}" if check.scalable else "fixed"
            print(f"{check.id:<24} {ceiling:<8} {check.description}")
        return 0

    if args.command == "compute":
        print(emit_table(args.object, args.n, args.format))
        return 0

    # verify
    if args.check is not None:
        if args.check not in checklib.CHECKS_BY_ID:
            print(f"error: unknown check id {args.check!r}", file=sys.stderr)
            print("valid ids:", file=sys.stderr)
            for check in checklib.CHECKS:
                print(f"  {check.id}", file=sys.stderr)
            return USAGE_EXIT
        ids = [args.check]
    else:
        ids = [check.id for check in checklib.CHECKS]
    results = _run_many(ids, args.n)
    failures = _print_results(results, args.format, print)
    return min(failures, MAX_FAILURE_EXIT)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
