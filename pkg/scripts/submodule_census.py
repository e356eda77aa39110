#!/usr/bin/env python3
"""Exhaustively census T-stable submodules and compare against the series.

For the chosen prime q, width d, and window depth N, prints the per-colength
totals next to the product-series prediction, then a stratum table per
colength: each leading-term profile x with its weight, the predicted
stratum size q**W(x), and the observed brute-force count.
"""

import argparse

from spiralshift import (
    configs_with_size,
    enumerate_submodules,
    leading_module,
    product_formula,
    weight,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--N", type=int, default=3)
    args = parser.parse_args()

    submodules = enumerate_submodules(args.q, args.d, args.N)
    predicted = product_formula(args.d, args.N).eval_q(args.q)

    print(f"T-stable census for q={args.q}, d={args.d}, depth={args.N}")
    for n in range(args.N + 1):
        observed = sum(1 for m in submodules if m.codim == n)
        mark = "ok" if observed == predicted.get(n, 0) else "MISMATCH"
        print(f"  colength {n}: observed {observed}, predicted {predicted.get(n, 0)} [{mark}]")

    for n in range(args.N + 1):
        print(f"strata at colength {n}:")
        tallies = {}
        for m in submodules:
            if m.codim == n:
                x = leading_module(m)
                tallies[x] = tallies.get(x, 0) + 1
        for x in configs_with_size(args.d, n):
            w = weight(x)
            observed = tallies.get(x, 0)
            mark = "ok" if observed == args.q**w else "MISMATCH"
            print(f"  x={x.levels} W={w} predicted {args.q ** w} observed {observed} [{mark}]")


if __name__ == "__main__":
    main()
