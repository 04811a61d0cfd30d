"""Command-line interface: compute, verify, selftest, oeis.

Exit codes: 0 success or match, 1 verification or comparison failure,
2 usage error, 3 I/O or network error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import (
    FAMILIES,
    FAMILY_LABELS,
    cross_check,
    identity_failures,
    sequence,
)
from .golden import GOLDEN_ROWS, TEXT_NOTES, misprint_positions
from .oeis import BFileFormatError, FetchError, compare, fetch_bfile, mapping_for
from .oracle import DEFAULT_BUDGET, OracleBudgetError, brute_count


def _family_arg(text: str) -> str:
    token = text.lower()
    if token not in FAMILIES:
        names = ", ".join(FAMILIES)
        raise argparse.ArgumentTypeError(f"unknown family {text!r}; valid names: {names}")
    return token


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_compute(args: argparse.Namespace) -> int:
    record = sequence(FAMILIES[args.family], args.k, args.n_max)
    if args.format == "plain":
        print(" ".join(str(v) for v in record.values))
    elif args.format == "csv":
        print("n,value")
        for n, v in enumerate(record.values, start=1):
            print(f"{n},{v}")
    elif args.format == "bfile":
        for n, v in enumerate(record.values, start=1):
            print(f"{n} {v}")
    else:
        payload = {
            "family": args.family,
            "k": args.k,
            "values": [str(v) for v in record.values],
        }
        print(json.dumps(payload))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    checks = 0
    skips = 0

    series_n = 4 * args.n_max
    for token, family in FAMILIES.items():
        for k in range(1, args.k_max + 1):
            checks += 1
            mismatches = cross_check(family, k, series_n)
            if mismatches:
                failures += 1
                n, a, b = mismatches[0]
                print(
                    f"cross-check {token} k={k} n<={series_n}: "
                    f"FAIL at n={n} (part-count sum {a}, series {b})"
                )
            else:
                print(f"cross-check {token} k={k} n<={series_n}: ok")

    oracle_k_max = min(args.k_max, 4)
    for token, family in FAMILIES.items():
        for k in range(1, oracle_k_max + 1):
            checks += 1
            record = sequence(family, k, args.n_max)
            bad: list[tuple[int, int, int]] = []
            over_budget: list[int] = []
            for n in range(1, args.n_max + 1):
                try:
                    got = brute_count(family, k, n, budget=args.budget)
                except OracleBudgetError:
                    over_budget.append(n)
                    continue
                if got != record.values[n - 1]:
                    bad.append((n, got, record.values[n - 1]))
            note = f" (skipped over budget: n={over_budget})" if over_budget else ""
            if over_budget:
                skips += len(over_budget)
            if bad:
                failures += 1
                n, got, expected = bad[0]
                print(
                    f"enumeration {token} k={k} n<={args.n_max}: "
                    f"FAIL at n={n} (enumerated {got}, computed {expected}){note}"
                )
            else:
                print(f"enumeration {token} k={k} n<={args.n_max}: ok{note}")

    checks += 1
    identity_problems = identity_failures(5, 30)
    if identity_problems:
        failures += 1
        for line in identity_problems:
            print(f"identities: FAIL {line}")
    else:
        print("identities k<=5 n<=30 (zero prefixes k<=6): ok")

    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"VERIFY {verdict}: {checks} checks, {failures} failed, {skips} skipped")
    return 0 if failures == 0 else 1


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0
    cells = 0
    excluded = 0
    for row in GOLDEN_ROWS:
        record = sequence(FAMILIES[row.family], row.k, len(row.values))
        skip = misprint_positions(row)
        bad = [
            (n, ours, printed)
            for n, (ours, printed) in enumerate(zip(record.values, row.values), start=1)
            if n not in skip and ours != printed
        ]
        cells += len(row.values) - len(skip)
        excluded += len(skip)
        if bad:
            failures += 1
            detail = ", ".join(f"n={n}: computed {a}, reference {b}" for n, a, b in bad)
            print(f"row {row.family} k={row.k}: FAIL ({detail})")
        else:
            print(f"row {row.family} k={row.k}: ok ({len(row.values) - len(skip)} cells)")
        for m in row.misprints:
            computed = record.values[m.n - 1]
            print(
                f"  known misprint at n={m.n}: printed {m.printed}, "
                f"computed {computed} ({m.note})"
            )
    for note in TEXT_NOTES:
        print(f"note: {note}")
    verdict = "PASS" if failures == 0 else "FAIL"
    print(
        f"SELFTEST {verdict}: {cells} cells checked, {failures} rows failed, "
        f"{excluded} known misprints excluded"
    )
    return 0 if failures == 0 else 1


def cmd_oeis(args: argparse.Namespace) -> int:
    family = FAMILIES[args.family]
    mapping = mapping_for(family, args.k)
    if mapping is None:
        print(f"no OEIS identification recorded for family={args.family} k={args.k}")
        return 0
    record = sequence(family, args.k, args.n_max)
    bfile = fetch_bfile(mapping.sequence_id, args.cache_dir)
    report = compare(record, bfile, mapping.index_offset)
    print(
        f"{mapping.sequence_id} vs {args.family} k={args.k}: "
        f"compared {report.compared} terms at index offset {report.index_offset}"
    )
    for n, ours, theirs in report.mismatches:
        print(f"  n={n}: computed {ours}, b-file {theirs}")
    if report.missing:
        print(f"  {len(report.missing)} terms past the end of the b-file (from n={report.missing[0]})")
    if report.matched:
        print("match")
        return 0
    print("MISMATCH" if report.mismatches else "no overlap")
    return 1


def build_parser() -> argparse.ArgumentParser:
    family_help = "; ".join(f"{token}: {label}" for token, label in FAMILY_LABELS.items())
    parser = argparse.ArgumentParser(
        prog="partcolor",
        description="Exact counts of colored integer partitions, eight families.",
        epilog=f"families: {family_help}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one family's counts for n = 1..n-max")
    p.add_argument("--family", required=True, type=_family_arg, metavar="NAME")
    p.add_argument("--k", required=True, type=_positive_int, help="number of colors")
    p.add_argument("--n-max", type=_positive_int, default=10)
    p.add_argument("--format", choices=("plain", "csv", "bfile", "json"), default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser(
        "verify",
        help="cross-check the closed-form paths, the enumeration oracle, and the identity suite",
    )
    p.add_argument("--n-max", type=_positive_int, default=10, help="oracle range; series run to 4x this")
    p.add_argument("--k-max", type=_positive_int, default=4)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET, help="max candidate words per oracle cell")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="recompute the frozen reference rows and diff")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("oeis", help="compare one family row against its OEIS b-file")
    p.add_argument("--family", required=True, type=_family_arg, metavar="NAME")
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--n-max", type=_positive_int, default=50)
    p.add_argument("--cache-dir", default=None, help="b-file cache (default: $PARTCOLOR_CACHE_DIR or ./.oeis-cache)")
    p.set_defaults(func=cmd_oeis)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FetchError, BFileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
