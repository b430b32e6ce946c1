"""Random-coefficient stability sweep: max eta per coefficient norm and solver.

    python3 scripts/randcoefs.py [--n 30] [--seeds 20] [--seed 0] [--out randcoefs.csv]

Writes plot data (norm, solver, max_eta, median_eta) and prints the table.
Expected shape: structured flat near machine precision; dense without
balancing growing with the coefficient norm.
"""
import argparse
import csv

import numpy as np

from colleague_qr.experiments import RAND_NORMS, random_coefficients
from colleague_qr.rootfinder import find_roots


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="randcoefs.csv")
    args = ap.parse_args()
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("coeff_norm", "solver", "max_eta", "median_eta"))
        for cn in RAND_NORMS:
            for solver in ("structured", "dense-nobalance", "dense"):
                etas = [find_roots(random_coefficients(args.n, cn, args.seed, j), 1e-5, solver=solver).max_eta
                        for j in range(args.seeds)]
                w.writerow((repr(cn), solver, repr(max(etas)), repr(float(np.median(etas)))))
                print(f"||c||={cn:7.0e} {solver:16s} max eta {max(etas):.2e} median {np.median(etas):.2e}")


if __name__ == "__main__":
    main()
