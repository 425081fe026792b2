#!/usr/bin/env python3
"""Critical precision profile over a prime range.

Prints one line per prime with its critical precision and the count of
distinct first-half increments at each level below it, then a histogram
of precision values. Useful for spotting how rare K > 2 really is.

    python3 scripts/kp_profile.py --to 2000
"""

import argparse
import sys
from collections import Counter

sys.path.insert(0, "src")

from pkcore.corefst import critical_precision  # noqa: E402
from pkcore.primes import primes_in_range  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="start", type=int, default=3)
    ap.add_argument("--to", type=int, default=1000)
    ap.add_argument("--only-high", action="store_true", help="print only K > 2")
    args = ap.parse_args()

    hist = Counter()
    for p in primes_in_range(max(args.start, 3), args.to):
        res = critical_precision(p)
        hist[res.kp] += 1
        if args.only_high and res.kp <= 2:
            continue
        profile = " ".join(f"{k}:{c}" for k, c in sorted(res.distinct_counts.items()))
        print(f"p={p:<6} K={res.kp}  distinct[{profile}]  target={(p - 1) // 2}")

    total = sum(hist.values())
    print(f"\n# {total} primes in [{args.start}, {args.to}]", file=sys.stderr)
    for kp in sorted(hist):
        bar = "#" * max(1, round(60 * hist[kp] / total))
        print(f"# K={kp}: {hist[kp]:>5}  {bar}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
