"""Classify p[k,c] over a grid of c and check the transported recurrence.

    python3 scripts/classify_demo.py [--k 1]
"""

import argparse
from fractions import Fraction

from opx.exactnum import DomainError, parse_rational
from opx.families import Su11Plus, plmx_classify, target_recurrence_float, transport_recurrence_float

GRID = ["0", "1/3", "3/5", "1", "-1", "5/4", "2", "-3"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=parse_rational, default=Fraction(1))
    ap.add_argument("--n", type=int, default=6, help="recurrence length checked")
    args = ap.parse_args()
    for text in GRID:
        c = parse_rational(text)
        try:
            cls = plmx_classify(args.k, c)
        except DomainError as exc:
            print(f"c = {text:>5}: {exc}")
            continue
        got = transport_recurrence_float(Su11Plus(args.k, c).recurrence(), cls, args.n)
        want = target_recurrence_float(cls, args.n)
        err = max(abs(a - b) for pair in zip(got, want) for a, b in zip(*pair))
        print(f"c = {text:>5}: {cls.case:<9} params={cls.to_json()['params']}  max |diff| = {err:.1e}")


if __name__ == "__main__":
    main()
