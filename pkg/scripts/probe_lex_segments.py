"""Search for families with smaller transposition-graph boundary than the lex initial segment of the same size.

    python scripts/probe_lex_segments.py --n 5 --sizes 10 30 50 70 --trials 20
"""

import argparse
from math import factorial

from snstab.families import benefraim_probe
from snstab.rng import stream


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--sizes", type=int, nargs="*", default=None, help="default: every size")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = args.sizes or range(1, factorial(args.n))
    print(f"{'k':>5} {'lex':>6} {'best found':>10}  smaller?")
    for k in sizes:
        p = benefraim_probe(args.n, k, stream(args.seed, "probe", k), args.trials, args.steps)
        flag = "yes" if p.counterexample is not None else ""
        print(f"{k:>5} {p.lex_boundary:>6} {p.best_other:>10}  {flag}")


if __name__ == "__main__":
    main()
