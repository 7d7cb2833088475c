#!/usr/bin/env python3
"""Measure how the cotree solver scales with instance size.

Generates random cotrees of 2**10 .. 2**K leaves for several seeds, times
the table computation plus extraction only, and reports the per-doubling
time ratios (a linear-time solver sits near 2.0).
"""

import argparse
import statistics

from ftmd.bench import doubling_ratios, run_scaling


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-exp", type=int, default=10)
    parser.add_argument("--max-exp", type=int, default=17)
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--base-seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    all_ratios = []
    for i in range(args.seeds):
        seed = args.base_seed + i * 1009
        rows = run_scaling(range(args.min_exp, args.max_exp + 1), seed, args.repeats)
        print(f"# seed {seed}")
        print("n nodes seconds")
        for row in rows:
            print(f"{row.n} {row.nodes} {row.seconds:.6f}")
        ratios = doubling_ratios(rows)
        all_ratios.extend(ratios)
        print("# doubling ratios:", " ".join(f"{r:.2f}" for r in ratios))
        print()

    print(f"median doubling ratio over {len(all_ratios)} steps: "
          f"{statistics.median(all_ratios):.3f}")


if __name__ == "__main__":
    main()
