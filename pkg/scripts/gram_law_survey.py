#!/usr/bin/env python3
"""Survey Gram's law: zeros per Gram interval over a scanned range.

Scans zeros with the oracle, buckets them into Gram intervals, and prints
the occupancy histogram; below t ~ 280 every interval should hold exactly
one zero.

Usage: python scripts/gram_law_survey.py --t-max 280
"""

import argparse
from collections import Counter

from rszeta.zeros import gram_point, scan_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-min", type=float, default=20.0)
    ap.add_argument("--t-max", type=float, default=150.0)
    ap.add_argument("--precision", type=int, default=192)
    args = ap.parse_args()

    records = scan_zeros(args.t_min, args.t_max, method="oracle",
                         prec=args.precision)
    grams = []
    n = 0
    while True:
        g = gram_point(n)
        if g > args.t_max:
            break
        if g >= args.t_min:
            grams.append((n, g))
        n += 1

    occupancy = Counter()
    for (n_lo, lo), (n_hi, hi) in zip(grams, grams[1:]):
        count = sum(1 for r in records if lo < r.t <= hi)
        occupancy[count] += 1
        flag = "" if count == 1 else "   <-- irregular"
        print(f"gram interval ({n_lo:4d}) [{float(lo):9.4f}, {float(hi):9.4f}]"
              f" holds {count} zero(s){flag}")
    print("\noccupancy histogram:", dict(sorted(occupancy.items())))
    print(f"zeros scanned: {len(records)}, intervals: {len(grams) - 1}")


if __name__ == "__main__":
    main()
