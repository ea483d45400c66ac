#!/usr/bin/env python3
"""Sweep word lengths and report which words extremize neighborhood size.

For each length up to --max-length, scans every word over the alphabet
(or a seeded sample once the exhaustive budget is exceeded) and prints the
minimum and maximum condensed or super-condensed neighborhood sizes with
their witnesses. Unary words typically sit at the minimum; the maximum is
the interesting end for sizing search indexes.
"""
import argparse

from nbhood import scan_extremal
from nbhood.core import KIND_CONDENSED, KIND_SUPER_CONDENSED
from nbhood.extremal import MODE_EXHAUSTIVE, MODE_SAMPLED
from nbhood.neighborhood import resolve_budget


def witness_list(words, limit=6):
    shown = ", ".join(words[:limit])
    extra = len(words) - min(len(words), limit)
    return shown + (f" (+{extra} more)" if extra else "")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=8, help="longest word length")
    parser.add_argument("--dist", type=int, default=1, help="distance threshold")
    parser.add_argument("--sigma", type=int, default=2, help="alphabet size")
    parser.add_argument(
        "--kind",
        choices=(KIND_CONDENSED, KIND_SUPER_CONDENSED),
        default=KIND_CONDENSED,
    )
    parser.add_argument("--samples", type=int, default=300, help="draws when sampling")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled lengths")
    parser.add_argument("--budget", type=int, help="exhaustive-scan word budget")
    args = parser.parse_args(argv)

    budget = resolve_budget(args.budget)
    print(
        f"{args.kind} neighborhood extrema, alphabet size {args.sigma}, "
        f"distance {args.dist}"
    )
    for w in range(1, args.max_length + 1):
        mode = MODE_EXHAUSTIVE if args.sigma**w <= budget else MODE_SAMPLED
        report = scan_extremal(
            w,
            args.dist,
            args.sigma,
            kind=args.kind,
            mode=mode,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
        )
        scope = "exhaustive" if mode == MODE_EXHAUSTIVE else f"{report.scanned} sampled"
        print(f"w={w:2d} ({scope})")
        print(f"  min {report.min_count}: {witness_list(report.min_words)}")
        print(f"  max {report.max_count}: {witness_list(report.max_words)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
