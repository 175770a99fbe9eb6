"""How the formal eigenvector residual behaves in exact, binary64 and mpmath arithmetic.

The coefficients ``h_n`` grow factorially for the su(1,1) operators, so a
binary64 absolute residual eventually sits at a rounding floor of roughly
``eps * max|h_n|`` even though the exact residual is zero.

    python3 scripts/residual_study.py [--N 12] [--z -2]
"""

import argparse
from fractions import Fraction

from opx.exactnum import parse_rational
from opx.families import Su11Plus
from opx.tridiag import eigenvector_coeffs, h_space_residuals


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=12)
    ap.add_argument("--z", type=parse_rational, default=Fraction(-2))
    ap.add_argument("--k", type=parse_rational, default=Fraction(1))
    ap.add_argument("--c", type=parse_rational, default=Fraction(1))
    args = ap.parse_args()
    T = Su11Plus(args.k, args.c).operator()
    _, h = eigenvector_coeffs(T, args.z, args.N)
    exact = h_space_residuals(T, args.z, h)
    f64 = h_space_residuals(T, args.z, h, exact=False)
    rel = h_space_residuals(T, args.z, h, exact=False, relative=True)
    mp = h_space_residuals(T, args.z, h, exact=False, dps=30)
    print(f"{'n':>3} {'|h_n|':>12} {'exact':>6} {'binary64 abs':>13} {'binary64 rel':>13} {'mp30 abs':>10}")
    for n in range(len(exact)):
        print(f"{n:>3} {abs(float(h[n])):12.4e} {str(exact[n]):>6} {abs(f64[n]):13.3e} "
              f"{abs(rel[n]):13.3e} {abs(mp[n]):10.2e}")


if __name__ == "__main__":
    main()
