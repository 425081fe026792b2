#!/usr/bin/env python3
"""Offline deep Wieferich scan.

The CI-gated scan stops at 1e4. This one defaults to 1e7, writes a
checkpoint after every block so an interrupted run resumes where it
left off, and fans out across processes. Expect minutes, not seconds.

    python3 scripts/scan_wieferich.py --to 10000000 \
        --checkpoint /tmp/wieferich.ckpt --jobs 4
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from pkcore.generators import wieferich_scan  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--to", type=int, default=10**7)
    ap.add_argument("--base", type=int, default=2)
    ap.add_argument("--checkpoint", default="wieferich.ckpt")
    ap.add_argument("--jobs", type=int, default=4)
    args = ap.parse_args()

    t0 = time.perf_counter()
    hits = wieferich_scan(
        args.to, base=args.base, checkpoint=args.checkpoint, jobs=args.jobs
    )
    elapsed = time.perf_counter() - t0
    for p in hits:
        print(f"{p}  base={args.base}")
    print(f"# scanned to {args.to} in {elapsed:.1f}s, {len(hits)} hit(s)", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
