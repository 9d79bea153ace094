#!/usr/bin/env python3
"""Print small tables of every sequence family, as a quick visual check.

Examples:
  python scripts/sequence_tables.py
  python scripts/sequence_tables.py --n-max 8 --alpha 2
"""

from __future__ import annotations

import argparse
import sys

from belleuler import sequences as seq
from belleuler.algebra import format_fraction


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=6, dest="n_max")
    parser.add_argument("--alpha", type=int, default=1)
    args = parser.parse_args()
    n_max, alpha = args.n_max, args.alpha

    print(f"Bell numbers (n <= {n_max}):")
    print("  " + ", ".join(format_fraction(seq.bell_number(n))
                           for n in range(n_max + 1)))

    print("\nBell polynomials:")
    for n in range(n_max + 1):
        print(f"  B_{n}(y) = {seq.bell_poly(n).pretty()}")

    print("\nStirling-2 triangle:")
    for n in range(n_max + 1):
        row = [format_fraction(seq.stirling2_number(n, k)) for k in range(n + 1)]
        print(f"  n={n}: " + " ".join(row))

    print(f"\nEuler polynomials of order {alpha}:")
    for n in range(n_max + 1):
        print(f"  E_{n}(x) = {seq.euler_poly_order(n, alpha).pretty()}")

    print(f"\nBell-based Euler polynomials of order {alpha}:")
    for n in range(n_max + 1):
        print(f"  n={n}: {seq.bell_euler_poly(n, alpha).pretty()}")

    return 0


if __name__ == "__main__":
    sys.exit(main())
