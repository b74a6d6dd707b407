#!/usr/bin/env python3
"""Scan the exact half split over 1..2^M for a range of M.

For each M the within-theorem steps 1..M-1 must tally exactly (2^{M-1},
2^{M-1}); the first step past the bound is printed too, to show where the
guarantee stops being a guarantee (it may still split evenly by accident).
"""

import argparse
import time

from collatzlab.halfsplit import halfsplit_verify


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-M", type=int, default=2)
    ap.add_argument("--max-M", type=int, default=16)
    args = ap.parse_args()

    for M in range(args.min_M, args.max_M + 1):
        t0 = time.perf_counter()
        report = halfsplit_verify(M, steps=min(M, 22))
        dt = time.perf_counter() - t0
        ok = report.exact_split()
        extra = next((t for t in report.tallies if not t.within_theorem), None)
        note = ""
        if extra is not None:
            note = f"; step {extra.step} (outside bound): ({extra.increases}, {extra.decreases})"
        print(
            f"M={M:>2}: steps 1..{M - 1} all exactly "
            f"({1 << (M - 1)}, {1 << (M - 1)}): {ok} [{dt:.2f}s]{note}"
        )
        if not ok:
            raise SystemExit(f"half split FAILED at M={M}")


if __name__ == "__main__":
    main()
