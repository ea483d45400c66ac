#!/usr/bin/env python3
"""Recompute the 48-cell bound table and diff it against the frozen copy.

Prints both panels (profile bound and closed-form floor, alphabet size 2,
lengths 4/6/8/10, distances 1..w-1) and exits 1 if any recomputed cell
disagrees with the regression values shipped in nbhood.verify.
"""
import argparse
import sys

from nbhood import bound_table_rows
from nbhood.verify import EXPECTED_TABLE


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--format", choices=("text", "csv"), default="text", help="output layout"
    )
    args = parser.parse_args(argv)

    rows = bound_table_rows()
    if args.format == "csv":
        print("panel,w,d,value")
        for panel, w, d, value in rows:
            print(f"{panel},{w},{d},{value}")
    else:
        for panel, label in (("a", "profile bound"), ("b", "closed-form floor")):
            print(f"panel ({panel}): {label}")
            for w in sorted({ww for p, ww, _, _ in rows if p == panel}):
                cells = [str(v) for p, ww, _, v in rows if p == panel and ww == w]
                print(f"  w={w:2d}: " + " ".join(cells))

    mismatches = [
        (key, value, EXPECTED_TABLE[key])
        for key, value in (((p, w, d), v) for p, w, d, v in rows)
        if EXPECTED_TABLE.get(key) != value
    ]
    if mismatches:
        for (panel, w, d), got, want in mismatches:
            print(
                f"MISMATCH panel {panel} w={w} d={d}: computed {got}, frozen {want}",
                file=sys.stderr,
            )
        return 1
    print(f"all {len(rows)} cells match the frozen table")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
