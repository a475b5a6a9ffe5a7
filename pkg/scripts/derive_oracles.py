"""Recompute the reference values frozen into the test suite, using the
sympy oracles in tests/oracles.py only (no package code).

    python scripts/derive_oracles.py
"""

import random
import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import sympy as sp  # noqa: E402

import oracles  # noqa: E402


def binary_powers(nvars, d, k):
    X = oracles.xs(nvars)
    return sum((X[0] + i * X[1]) ** d for i in range(k))


def normal_forms(d):
    x0, x1, x2, x3 = oracles.xs(4)
    return {
        "f2": x0 ** (d - 1) * x1 + x2**d + x3**d,
        "f3": x0 ** (d - 1) * x1 + x2 ** (d - 1) * x3,
        "f4": x0 ** (d - 2) * x1**2 + x0 ** (d - 1) * x2 + x3**d,
        "f5": x0 ** (d - 3) * x1**3 + x0 ** (d - 2) * x1 * x2 + x0 ** (d - 1) * x3,
    }


def main():
    t0 = time.time()
    print("binary conormal (n, d, k): oracle / closed form")
    for n, d, k in [(2, 7, 4), (3, 5, 3)]:
        f = sp.expand(binary_powers(n + 1, d, k))
        print(" ", (n, d, k), oracles.symmetric_conormal_dim(f, n + 1, d, k), comb(n + d, d) - k * n - k)

    print("Young flattening rank and conormal dim, d = 3")
    for name, f in normal_forms(3).items():
        M = oracles.young_matrix(sp.expand(f), 4, 3, 1, 1)
        print(" ", name, oracles.rank(M), oracles.young_conormal_dim(sp.expand(f), 4, 3, 1, 1))

    print("Terracini affine dims at random points")
    rng = random.Random(7)
    for k, d, n in [(1, 3, 2), (4, 3, 3), (5, 4, 2), (3, 4, 2), (7, 3, 4)]:
        pts = [tuple(rng.randint(-4, 4) for _ in range(n + 1)) for _ in range(k)]
        print(" ", (k, d, n), oracles.terracini_dim(pts, d))

    print("moving spans")
    print("  [1:t:0:0], d=4:", oracles.moving_span_dim(["1", "t", "0", "0"], 4))
    print("  [1:t:0],   d=4:", oracles.moving_span_dim(["1", "t", "0"], 4))
    print("  [1:t],     d=4:", oracles.moving_span_dim(["1", "t"], 4))

    print("defective ternary quartic, k=5: catalecticant rank and conormal dim")
    X = oracles.xs(3)
    ls = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -2, 3)]
    f = sp.expand(sum(sum(c * x for c, x in zip(l, X)) ** 4 for l in ls))
    print("  rank", oracles.rank(oracles.catalecticant(f, 3, 4, 2)), "conormal", oracles.symmetric_conormal_dim(f, 3, 4, 2))
    print(f"done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
