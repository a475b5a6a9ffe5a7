"""Projective Terracini dimensions of sigma_k(nu_d(P^n)) at random rational points.

    python scripts/terracini_table.py --n 2 3 4 --d 3 4 --kmax 15
"""

import argparse

from secsing.classify import ambient_dim, expected_secant_dim, naive_secant_dim
from secsing.tangent import random_terracini_dim


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--d", type=int, nargs="+", default=[3, 4])
    p.add_argument("--kmax", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    print(f"{'n':>2} {'d':>2} {'k':>3} {'sampled':>8} {'naive':>6} {'expected':>8}")
    for n in args.n:
        for d in args.d:
            for k in range(1, args.kmax + 1):
                got = random_terracini_dim(k, d, n, seed=args.seed) - 1
                naive = naive_secant_dim(k, d, n)
                flag = "  defective" if got < naive else ""
                print(f"{n:>2} {d:>2} {k:>3} {got:>8} {naive:>6} {expected_secant_dim(k, d, n):>8}{flag}")
                if got == ambient_dim(d, n):
                    break


if __name__ == "__main__":
    main()
