"""Exact-recovery rate of reconstruct() on corrupted dictatorships.

    python scripts/reconstruction_sweep.py --n 6 7 --rho 0 0.01 0.05 0.1 0.2 --trials 100
"""

import argparse
from fractions import Fraction

from snstab.verify import reconstruction_trials


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[6, 7])
    ap.add_argument("--c", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--rho", type=Fraction, nargs="+", default=[Fraction(0), Fraction(1, 20), Fraction(1, 5)])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rates = reconstruction_trials(args.n, args.c, args.rho, args.trials, args.seed)
    print(f"{'n':>3} {'c':>3} {'rho':>8} {'recovered':>10} {'symdiff=0':>10}")
    for (n, c, rho), (hit, zero) in rates.items():
        print(f"{n:>3} {c:>3} {float(rho):>8.3f} {float(hit):>10.3f} {float(zero):>10.3f}")


if __name__ == "__main__":
    main()
