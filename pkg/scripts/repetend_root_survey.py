#!/usr/bin/env python3
"""Survey repetends across a row of denominators in one base.

For each repeating n/den the repetend digit sum lands on a multiple of
base-1 whenever the denominator's base-coprime part also avoids the
factors of base-1, which this table makes easy to eyeball:

    python scripts/repetend_root_survey.py --base 10 --num 9 --max-den 40
"""

import argparse
import math
import sys

from radixroot import Rational, classify, digital_root, format_repr, to_repeating


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base", type=int, default=10)
    ap.add_argument("--num", type=int, default=9)
    ap.add_argument("--max-den", type=int, default=40)
    args = ap.parse_args()

    k = args.base
    print(f"base {k}: repetend digit sums and roots for {args.num}/den")
    for den in range(2, args.max_den + 1):
        if math.gcd(args.num, den) != 1:
            continue
        q = Rational(args.num, den)
        if classify(q, k).is_terminating:
            continue
        r = to_repeating(q, k)
        digits = sum(r.repetend)
        root = digital_root(digits, k).root
        marker = "*" if digits % (k - 1) == 0 else " "
        print(
            f"  den={den:<4} T={r.period:<4} sum={digits:<5} root={root} {marker} "
            f"{format_repr(r)}"
        )
    print("rows marked * have repetend digit sum divisible by base-1")
    return 0


if __name__ == "__main__":
    sys.exit(main())
