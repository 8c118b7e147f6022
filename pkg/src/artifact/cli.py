"""Command-line interface.

Three subcommands:

* ``enumerate`` prints one descent-statistic polynomial computed by exhaustive
  enumeration.
* ``check`` runs identity checks from the registry and prints their reports.
* ``compare`` computes the same polynomial by independent methods and reports
  whether they agree (per-method timings go to stderr).

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a check
or comparison failed, 2 bad arguments or unknown check id, 3 an enumeration
bound was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .enumeration import BoundExceeded, poly_group
from .permutations import GROUPS
from .polynomials import VARIABLES, LaurentPoly
from .recurrences import hyatt_plus, minus_transform, recurrence_poly
from .registry import CHECK_IDS, run_all, run_check
from .series import DEFAULT_ORDER

_WEIGHTS = ("biv", "fivevar", "hat", "q")
_COMPARE_METHODS = ("brute", "recurrence", "hyatt")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artifact",
        description="exact parity-refined descent statistics on signed permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="print one polynomial from brute-force enumeration")
    p_enum.add_argument("--group", required=True, choices=GROUPS)
    p_enum.add_argument("--n", required=True, type=int)
    p_enum.add_argument("--i", type=int, default=None,
                        help="descent cutoff (required for groups G and H)")
    p_enum.add_argument("--weight", default="biv", choices=_WEIGHTS)
    p_enum.add_argument("--format", default="pretty", choices=("json", "csv", "pretty"))
    p_enum.add_argument("--jobs", type=int, default=1)

    p_check = sub.add_parser("check", help="run identity checks from the registry")
    target = p_check.add_mutually_exclusive_group(required=True)
    target.add_argument("--id", dest="check_id", help="one check id")
    target.add_argument("--all", action="store_true", help="run every check")
    p_check.add_argument("--order", type=int, default=None,
                         help=f"series truncation order (default {DEFAULT_ORDER})")
    p_check.add_argument("--max-n", type=int, default=None,
                         help="cap on the ranks the polynomial checks sweep")
    p_check.add_argument("--format", default="pretty", choices=("json", "pretty"))
    p_check.add_argument("--jobs", type=int, default=1)

    p_cmp = sub.add_parser("compare", help="compute one polynomial by several methods")
    p_cmp.add_argument("--group", required=True, choices=("B", "D"))
    p_cmp.add_argument("--n", required=True, type=int)
    p_cmp.add_argument("--methods", default="brute,recurrence",
                       help="comma-separated subset of brute,recurrence,hyatt")
    p_cmp.add_argument("--jobs", type=int, default=1)
    return parser


def _print_poly(poly: LaurentPoly, fmt: str) -> None:
    if fmt == "pretty":
        print(poly)
    elif fmt == "json":
        print(json.dumps(poly.to_json_dict()))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(list(VARIABLES) + ["coef"])
        for exp, coef in poly.sorted_terms():
            writer.writerow(list(exp) + [coef])


def _cmd_enumerate(args) -> int:
    try:
        poly = poly_group(args.group, args.n, weight=args.weight, i=args.i, jobs=args.jobs)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_poly(poly, args.format)
    return 0


def _summarize(report: dict, indent: str = "") -> list[str]:
    lines = [f"{indent}{report['status'].upper():4s} {report['id']}  ({report['label']})"]
    if report["status"] == "pass":
        return lines
    for reading in report.get("readings", []):
        mark = "intended" if reading.get("intended") else "other reading"
        lines.append(f"{indent}    [{reading['status']}] {reading['reading']} ({mark})")
    for case in report.get("cases", []):
        if case.get("status") == "fail":
            detail = case.get("witness_monomial", "")
            lines.append(f"{indent}    fail at n={case.get('n')} {detail}")
            break
    if "u_power" in report:
        residual = str(report.get("residual"))
        if len(residual) > 120:
            residual = residual[:120] + "..."
        lines.append(f"{indent}    fail at u^{report['u_power']}: {residual}")
    return lines


def _cmd_check(args) -> int:
    if args.check_id is not None and args.check_id not in CHECK_IDS:
        print(f"error: unknown check id {args.check_id!r}", file=sys.stderr)
        print("known ids: " + ", ".join(CHECK_IDS), file=sys.stderr)
        return 2
    started = time.perf_counter()
    if args.check_id is not None:
        reports = [run_check(args.check_id, order=args.order, max_n=args.max_n, jobs=args.jobs)]
    else:
        reports = run_all(order=args.order, max_n=args.max_n, jobs=args.jobs)
    elapsed = time.perf_counter() - started
    if args.format == "json":
        print(json.dumps(reports, indent=2))
    else:
        for report in reports:
            for line in _summarize(report):
                print(line)
    print(f"ran {len(reports)} check(s) in {elapsed:.2f}s", file=sys.stderr)
    failed = [r for r in reports if r["status"] == "fail"]
    return 1 if failed else 0


def _compare_method(method: str, group: str, n: int, jobs: int) -> LaurentPoly:
    if method == "brute":
        return poly_group(group, n, weight="biv", jobs=jobs)
    if method == "recurrence":
        return recurrence_poly(group, n)
    # positive-last-entry expansion plus its reciprocity-reflected half
    plus = hyatt_plus(group, n)
    return plus + minus_transform(group, n, plus)


def _cmd_compare(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods or any(m not in _COMPARE_METHODS for m in methods):
        print(
            f"error: --methods must be a comma-separated subset of {', '.join(_COMPARE_METHODS)}",
            file=sys.stderr,
        )
        return 2
    if args.group == "D" and args.n < 2 and ("recurrence" in methods or "hyatt" in methods):
        print("error: type D closed routes need n >= 2", file=sys.stderr)
        return 2
    polys = {}
    for method in methods:
        started = time.perf_counter()
        try:
            polys[method] = _compare_method(method, args.group, args.n, args.jobs)
        except BoundExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        elapsed = time.perf_counter() - started
        print(f"{method}: {elapsed:.3f}s", file=sys.stderr)
    base = methods[0]
    agree = True
    for method in methods[1:]:
        if polys[method] != polys[base]:
            agree = False
            print(f"{base} and {method} disagree for {args.group}_{args.n}")
    if agree:
        print(f"methods agree for {args.group}_{args.n}: " + ", ".join(methods))
        return 0
    return 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "enumerate":
        return _cmd_enumerate(args)
    if args.command == "check":
        return _cmd_check(args)
    return _cmd_compare(args)


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
