"""Secant and tangent numbers from operator entries and from enumeration.

    python3 scripts/euler_tables.py [--n 8]
"""

import argparse
from fractions import Fraction

from opx.families import Su11Plus, sh_entry
from opx.permoracle import ZIGZAG_GUARD, down_up_odd_count, zigzag_moment
from opx.tridiag import matrix_entry


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8, help="largest even power")
    args = ap.parse_args()
    T = Su11Plus(Fraction(1, 2)).operator()
    print(f"{'m':>3} {'su11+ <e0,T^m e0>':>18} {'zigzag(eta=1)':>14} {'sh <e1,X^m e1>':>15} {'down-up':>9}")
    for m in range(0, args.n + 1, 2):
        sec = matrix_entry(T, m, 0, 0)
        zz = zigzag_moment(m, 1) if m <= ZIGZAG_GUARD else "-"
        tan = sh_entry(Fraction(1), m, 1, 1)
        du = down_up_odd_count(m + 1) if m + 1 <= 9 else "-"
        print(f"{m:>3} {str(sec):>18} {str(zz):>14} {str(tan):>15} {str(du):>9}")


if __name__ == "__main__":
    main()
