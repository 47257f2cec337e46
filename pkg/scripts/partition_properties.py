#!/usr/bin/env python3
"""Tabulate the structural properties of the bounded chain partition of
2^[2m] with chain size cap m+1: chain count, start-level profile against
the binomial increments, size bound, and index monotonicity.
"""

import argparse
from math import comb

from boolcut.chains import bounded_chain_partition, check_index_monotonicity, start_level_counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=6)
    args = ap.parse_args()

    print(f"{'m':>2} {'chains':>7} {'C(2m,m)':>8} {'max size':>8} "
          f"{'starts == deltas':>16} {'monotone':>9}")
    for m in range(args.max_m + 1):
        p = bounded_chain_partition(2 * m, m + 1)
        counts = start_level_counts(p)
        deltas = {j: comb(2 * m, j) - comb(2 * m, j - 1) if j else 1 for j in range(m + 1)}
        starts_ok = counts == {j: d for j, d in deltas.items() if d}
        ok, violations = check_index_monotonicity(p)
        print(f"{m:>2} {len(p.chains):>7} {comb(2 * m, m):>8} "
              f"{max(ch.size for ch in p.chains):>8} {str(starts_ok):>16} "
              f"{str(ok):>9}{'' if ok else f'  ({len(violations)} violations)'}")


if __name__ == "__main__":
    main()
