#!/usr/bin/env python3
"""Fuzz the solver against the brute-force oracle on random weighted cographs."""

import argparse
import random
import sys

from ftmd import is_fault_tolerant, oracle_min_ft, random_cotree, realize, solve


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--max-weight", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    mismatches = 0
    for trial in range(args.count):
        n = rng.randint(1, args.max_n)
        g = realize(random_cotree(n, rng.randrange(2**31)))
        weights = [rng.randint(0, args.max_weight) for _ in range(n)]
        solution = solve(g, weights)
        reference = oracle_min_ft(g, weights)
        bad_weight = solution.weight != reference.weight
        bad_cert = not is_fault_tolerant(g, set(solution.vertices))
        if bad_weight or bad_cert:
            mismatches += 1
            print(f"MISMATCH trial={trial} n={n} edges={g.edges()} "
                  f"weights={weights} solver={solution.weight} "
                  f"oracle={reference.weight} cert_ok={not bad_cert}")
    print(f"{args.count} instances, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
