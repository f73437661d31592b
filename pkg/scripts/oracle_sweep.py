"""Compare the brute-force and fast engines on random G(n, p) graphs.

Usage:
    python scripts/oracle_sweep.py [--count 400] [--max-n 12] [--seed 7]
"""
import argparse
import random
import time
from collections import Counter

from ocdpoly.engine import ocd_polynomial_bruteforce, ocd_polynomial_fast
from ocdpoly.graph import random_graph, to_graph6

DENSITIES = (0.1, 0.3, 0.5, 0.8)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=400)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    mismatches = []
    work = Counter()
    t0 = time.perf_counter()
    for i in range(args.count):
        p = DENSITIES[i % len(DENSITIES)]
        g = random_graph(rng.randint(1, args.max_n), p, rng)
        brute, bs = ocd_polynomial_bruteforce(g)
        fast, fs = ocd_polynomial_fast(g)
        work[p, "brute"] += bs.candidates_visited
        work[p, "fast"] += fs.candidates_visited
        if brute != fast:
            mismatches.append((to_graph6(g), brute, fast))

    print(f"{args.count} graphs in {time.perf_counter() - t0:.1f}s, {len(mismatches)} mismatches")
    print(f"{'p':>5} {'brute candidates':>18} {'fast candidates':>16} {'ratio':>7}")
    for p in DENSITIES:
        b, f = work[p, "brute"], work[p, "fast"]
        print(f"{p:>5} {b:>18} {f:>16} {f / b:>7.3f}")
    for g6, brute, fast in mismatches:
        print(f"MISMATCH {g6}: brute {brute} / fast {fast}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
