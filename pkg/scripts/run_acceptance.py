"""Run the seventeen acceptance criteria and print one line per criterion.

    python3 scripts/run_acceptance.py [--json]
"""

import argparse
import json
import sys

from opx.verify import ACCEPTANCE, run_acceptance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="emit one JSON object per line")
    args = ap.parse_args()
    failed = 0
    for n in sorted(ACCEPTANCE):
        r = run_acceptance(n)
        failed += not r.passed
        if args.json:
            print(json.dumps(r.to_json()))
        else:
            print(f"criterion {n:2d}: {'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.detail})")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
