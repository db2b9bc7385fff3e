#!/usr/bin/env python3
"""How fast the correction series converges against the oracle.

Prints |Z_k(t) - Z_oracle(t)| for k = 0..5 correction terms on a t-grid,
plus the formula's own error estimate; the estimate should track the
k = 5 column within an order of magnitude.

Usage: python scripts/correction_convergence.py --t-min 60 --t-max 400 --points 8
"""

import argparse

from mpmath import mpf

from rszeta.zeta_eval import RSConfig, oracle_z, z_function


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-min", type=float, default=60.0)
    ap.add_argument("--t-max", type=float, default=400.0)
    ap.add_argument("--points", type=int, default=8)
    ap.add_argument("--precision", type=int, default=224)
    args = ap.parse_args()

    header = ["t"] + [f"k={k}" for k in range(6)] + ["err_est(k=5)"]
    print(("%10s " * len(header)) % tuple(header))
    for i in range(args.points):
        t = mpf(args.t_min) + (mpf(args.t_max) - args.t_min) * i / max(args.points - 1, 1)
        ref, _ = oracle_z(t, args.precision)
        row = [float(t)]
        for k in range(6):
            br = z_function(t, RSConfig(correction_terms=k))
            row.append(float(abs(br.z - ref)))
        row.append(float(z_function(t).error_estimate))
        print("%10.2f " % row[0] + " ".join("%10.2e" % v for v in row[1:]))


if __name__ == "__main__":
    main()
