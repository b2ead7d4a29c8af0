"""Tabulate the derangement graph's extreme eigenvalues and the ratio |lambda_K| n^2 / d_n.

    python scripts/derangement_lambda_k.py --nmax 14
"""

import argparse

from snstab.bounds import derangement_input, hoffman_bound
from snstab.repr_spectra import cayley_spectrum, second_largest_modulus_nontrivial


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=12)
    args = ap.parse_args()
    print(f"{'n':>3} {'d_n':>12} {'lambda_min':>14} {'|lambda_K|':>12} {'ratio':>10} {'hoffman':>12}")
    for n in range(4, args.nmax + 1):
        rep = cayley_spectrum("derangement", n)
        value, ratio = second_largest_modulus_nontrivial("derangement", n)
        print(f"{n:>3} {rep.degree:>12} {str(rep.lambda_min):>14} {str(value):>12} "
              f"{float(ratio):>10.4f} {str(hoffman_bound(derangement_input(n))):>12}")


if __name__ == "__main__":
    main()
