"""Timing sweep for the structured O(n^2) and dense O(n^3) solvers.

    python3 scripts/bench.py [--sizes 125,250,...] [--dense-max 1000] [--reps 3]

Prints the CSV rows and the per-doubling time ratios (ideal 4 and 8).
"""
import argparse

import numpy as np

from colleague_qr.bench import bench_rows, doubling_ratios


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", default="125,250,500,1000,2000,4000")
    ap.add_argument("--dense-max", type=int, default=1000)
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench_rows(sizes, reps=args.reps, dense_max=args.dense_max)
    print("n,structured_seconds,dense_seconds")
    for n, ts, td in rows:
        print(f"{n},{ts:.6g},{'' if td is None else f'{td:.6g}'}")
    ts = [r[1] for r in rows]
    td = [r[2] for r in rows if r[2] is not None]
    print("structured ratios:", np.round(doubling_ratios(ts), 2))
    if len(td) > 1:
        print("dense ratios:     ", np.round(doubling_ratios(td), 2))


if __name__ == "__main__":
    main()
