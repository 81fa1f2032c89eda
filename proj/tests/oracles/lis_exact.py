"""Exact law of the longest increasing subsequence of a uniform permutation.

Sums f_lambda^2 over partitions of N grouped by the first row (RSK), with
f_lambda from the hook-length formula, in exact rational arithmetic.
Usage: python3 lis_exact.py [N]   (default 52)
"""
import sys
from fractions import Fraction
from math import factorial


def partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def standard_tableaux(shape):
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])]
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def lis_law(n):
    counts = {}
    for shape in partitions(n, n):
        f = standard_tableaux(shape)
        counts[shape[0]] = counts.get(shape[0], 0) + f * f
    total = factorial(n)
    assert sum(counts.values()) == total
    return {k: Fraction(v, total) for k, v in sorted(counts.items())}


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 52
    p = lis_law(n)
    mean = sum(k * v for k, v in p.items())
    central = lambda r: sum((k - mean) ** r * v for k, v in p.items())
    var = central(2)
    print(f"N={n} mean={float(mean):.6f} sd={float(var) ** 0.5:.6f} "
          f"skew={float(central(3)) / float(var) ** 1.5:.6f} kurt={float(central(4)) / float(var) ** 2 - 3:.6f}")
    print(f"P(7<=l<=19)={float(sum(v for k, v in p.items() if 7 <= k <= 19)):.7f}")
    if n <= 12:
        print("distribution:", {k: str(v) for k, v in p.items()})
