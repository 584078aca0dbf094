"""Command-line front end: verification runs, tables, run lengths, scans.

Usage examples:

    twinpoly verify --all 41
    twinpoly verify --p 3
    twinpoly table --p 11 --format csv
    twinpoly euler --reflect 40
    twinpoly scan --limit 100 --format json
    twinpoly primes --limit 41

Data goes to stdout, diagnostics to stderr, so pipelines stay clean.
In text output, header and summary lines start with '#'; every other
line is a data row. Exit status is 0 when every emitted evaluation is
prime, 1 when a composite shows up, 2 on usage or precondition errors.
"""

import argparse
import csv
import json
import sys

from .analysis import (
    DEFAULT_RUN_CAP,
    FirstFailure,
    run_length,
    scan_seeds,
    verify_all,
    verify_family,
)
from .polynomial import (
    EULER_POLYNOMIAL,
    TwinPrimeSeed,
    evaluate_quadratic,
    reflect,
)
from .primality import primes_up_to, trial_division_oracle

FORMATS = ("text", "csv", "json")
SEED_ROW_HEADER = ["p", "count", "all_prime", "failure_n", "failure_magnitude", "failure_factor"]


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def _print_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _print_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _failure_json(failure: FirstFailure | None):
    if failure is None:
        return None
    return {"n": failure.n, "magnitude": failure.magnitude, "factor": failure.factor}


def _failure_cells(failure: FirstFailure | None) -> list:
    if failure is None:
        return ["", "", ""]
    factor = "" if failure.factor is None else failure.factor
    return [failure.n, failure.magnitude, factor]


def _failure_text(failure: FirstFailure | None) -> str:
    if failure is None:
        return "-"
    return f"{failure.n}:{failure.magnitude}:{failure.factor}"


def _emit_run_report(report, fmt: str, *, summary: bool) -> None:
    if fmt == "csv":
        _print_csv(
            ["p", "n", "raw", "magnitude", "is_prime"],
            [[r.p, r.n, r.raw, r.magnitude, _bool_str(r.is_prime)] for r in report.records],
        )
    elif fmt == "json":
        _print_json(
            {
                "seed": report.p,
                "range": {
                    "min": report.range.n_min,
                    "max": report.range.n_max,
                    "count": report.range.count,
                },
                "records": [
                    {"n": r.n, "raw": r.raw, "magnitude": r.magnitude, "is_prime": r.is_prime}
                    for r in report.records
                ],
                "all_prime": report.all_prime,
            }
        )
    else:
        print("# p n raw magnitude is_prime")
        for r in report.records:
            print(f"{r.p} {r.n} {r.raw} {r.magnitude} {_bool_str(r.is_prime)}")
        if summary:
            if report.all_prime:
                print(f"# p={report.p}: {report.range.count} evaluations, all prime")
            else:
                f = report.first_failure
                print(
                    f"# p={report.p}: {report.range.count} evaluations, "
                    f"composite at n={f.n}: |{f.magnitude}| has factor {f.factor}"
                )


SeedRow = tuple[int, int, bool, FirstFailure | None]


def _seed_rows(entries: list[SeedRow]) -> list[list]:
    return [
        [p, count, _bool_str(all_prime)] + _failure_cells(failure)
        for p, count, all_prime, failure in entries
    ]


def _print_seed_rows_text(entries: list[SeedRow]) -> None:
    print("# p count all_prime failure(n:magnitude:factor)")
    for p, count, all_prime, failure in entries:
        print(f"{p} {count} {_bool_str(all_prime)} {_failure_text(failure)}")


def _cmd_verify(args) -> int:
    if args.p is not None:
        report = verify_family(TwinPrimeSeed(args.p))
        _emit_run_report(report, args.format, summary=True)
        return 0 if report.all_prime else 1

    aggregate = verify_all(args.all_limit)
    entries = [
        (r.p, r.range.count, r.all_prime, r.first_failure) for r in aggregate.reports
    ]
    if args.format == "csv":
        _print_csv(SEED_ROW_HEADER, _seed_rows(entries))
    elif args.format == "json":
        _print_json(
            {
                "limit": args.all_limit,
                "seeds": list(aggregate.seeds),
                "per_seed": [
                    {
                        "p": r.p,
                        "count": r.range.count,
                        "all_prime": r.all_prime,
                        "first_failure": _failure_json(r.first_failure),
                    }
                    for r in aggregate.reports
                ],
                "total_evaluations": aggregate.total_evaluations,
                "total_all_prime": aggregate.total_all_prime,
                "overall_distinct_primes": list(aggregate.overall_distinct_primes),
            }
        )
    else:
        _print_seed_rows_text(entries)
        print(
            f"# total {aggregate.total_evaluations} evaluations across "
            f"{len(aggregate.seeds)} seeds; all prime: {_bool_str(aggregate.total_all_prime)}"
        )
    return 0 if aggregate.total_all_prime else 1


def _cmd_table(args) -> int:
    report = verify_family(TwinPrimeSeed(args.p))
    _emit_run_report(report, args.format, summary=False)
    return 0 if report.all_prime else 1


def _cmd_euler(args) -> int:
    if args.reflect is None:
        poly = EULER_POLYNOMIAL
    else:
        # The mirrored run polynomial (n - x)**2 + (n - x) + 41, which
        # doubles a length-x prime run; it equals the reflection at
        # x - 1 because the base polynomial is symmetric about -1/2.
        poly = reflect(EULER_POLYNOMIAL, args.reflect - 1)
    length = run_length(poly, 0, DEFAULT_RUN_CAP)
    failure = None
    if length < DEFAULT_RUN_CAP:
        magnitude = abs(evaluate_quadratic(poly, length))
        failure = FirstFailure(length, magnitude, trial_division_oracle(magnitude).witness)

    if args.format == "csv":
        _print_csv(
            ["a", "b", "c", "start", "cap", "run_length", "failure_n", "failure_magnitude", "failure_factor"],
            [[poly.a, poly.b, poly.c, 0, DEFAULT_RUN_CAP, length] + _failure_cells(failure)],
        )
    elif args.format == "json":
        _print_json(
            {
                "polynomial": {"a": poly.a, "b": poly.b, "c": poly.c},
                "reflect": args.reflect,
                "start": 0,
                "cap": DEFAULT_RUN_CAP,
                "run_length": length,
                "first_composite": _failure_json(failure),
            }
        )
    else:
        print("# a b c start cap run_length failure(n:magnitude:factor)")
        print(f"{poly.a} {poly.b} {poly.c} 0 {DEFAULT_RUN_CAP} {length} {_failure_text(failure)}")
    return 0


def _cmd_scan(args) -> int:
    if args.limit < 3 or args.limit > args.max_limit:
        raise ValueError(f"limit must lie in [3, {args.max_limit}], got {args.limit}")
    rows = scan_seeds(args.limit, ceiling=args.max_limit)
    entries = [(r.p, r.count, r.all_prime, r.first_failure) for r in rows]
    if args.format == "csv":
        _print_csv(SEED_ROW_HEADER, _seed_rows(entries))
    elif args.format == "json":
        _print_json(
            {
                "limit": args.limit,
                "rows": [
                    {
                        "p": r.p,
                        "count": r.count,
                        "all_prime": r.all_prime,
                        "first_failure": _failure_json(r.first_failure),
                    }
                    for r in rows
                ],
            }
        )
    else:
        _print_seed_rows_text(entries)
    return 0 if all(r.all_prime for r in rows) else 1


def _cmd_primes(args) -> int:
    primes = primes_up_to(args.limit)
    if args.format == "csv":
        _print_csv(["p"], [[p] for p in primes])
    elif args.format == "json":
        _print_json(primes)
    else:
        for p in primes:
            print(p)
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinpoly",
        description="Verify and explore the prime runs of (1+2n)(p-2n)+2 for twin-prime seeds p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify one seed or every seed below a limit")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--p", type=int, help="twin lower member to verify")
    target.add_argument("--all", dest="all_limit", type=int, metavar="LIMIT",
                        help="verify every twin lower member below LIMIT")
    _add_format(verify)
    verify.set_defaults(handler=_cmd_verify)

    table = sub.add_parser("table", help="emit the evaluation table for one seed")
    table.add_argument("--p", type=int, required=True, help="twin lower member to tabulate")
    _add_format(table)
    table.set_defaults(handler=_cmd_table)

    euler = sub.add_parser("euler", help="prime run length of n**2 + n + 41")
    euler.add_argument("--reflect", type=int, metavar="X",
                       help="use the mirrored polynomial (n-X)**2 + (n-X) + 41 instead")
    _add_format(euler)
    euler.set_defaults(handler=_cmd_euler)

    scan = sub.add_parser("scan", help="first-failure scan over twin lower members")
    scan.add_argument("--limit", type=int, required=True, help="scan seeds below this bound")
    scan.add_argument("--max-limit", type=int, default=10**6,
                      help="largest accepted --limit (default 10**6)")
    _add_format(scan)
    scan.set_defaults(handler=_cmd_scan)

    primes = sub.add_parser("primes", help="list primes up to a limit")
    primes.add_argument("--limit", type=int, required=True, help="inclusive upper bound")
    _add_format(primes)
    primes.set_defaults(handler=_cmd_primes)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
