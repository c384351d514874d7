#!/usr/bin/env python3
"""Run the wall-clock scaling grid and write a CSV table.

Example (the d-independence headline experiment):

    python scripts/bench_scaling.py --n 5000 --l 50 --d 1000,4000 \
        --epsilon 0.25 --seed 9 --out bench.csv
"""

import argparse
import sys

from dimredkc.bench import bench_scaling, write_bench_csv


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5000)
    parser.add_argument("--l", dest="ell", type=int, default=50)
    parser.add_argument("--d", default="1000,4000", help="comma-separated dimensions")
    parser.add_argument("--epsilon", type=float, default=0.25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = parser.parse_args(argv)

    cells = [(args.n, int(d), args.ell) for d in args.d.split(",")]
    rows = bench_scaling(cells, epsilon=args.epsilon, seed=args.seed, repeats=args.repeats)
    if args.out:
        write_bench_csv(rows, args.out)
    else:
        for row in rows:
            print(row)
    if len(rows) >= 2:
        lo, hi = rows[0], rows[-1]
        print(
            f"solve ratio d={hi['d']}/d={lo['d']}: "
            f"{hi['solve_seconds'] / lo['solve_seconds']:.2f}; "
            f"control ratio: {hi['control_seconds'] / lo['control_seconds']:.2f}",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
