#!/usr/bin/env python3
"""Throughput and witness-magnitude profile of the five decomposers.

For each form and each decade n ~ 10^k, times a batch of represent() calls
and records the largest witness component seen.  Shows the construction
staying fast and well inside the 64-bit width policy across the full
supported range (the ceiling is 2^55).
"""

from __future__ import annotations

import argparse
import sys
import time

from mixedsums.arith import REPRESENT_MAX
from mixedsums.forms import MixedForm, represent, verify


def bench(form: MixedForm, base: int, batch: int) -> tuple[float, int]:
    worst = 0
    t0 = time.perf_counter()
    for n in range(base, base + batch):
        cert = represent(form, n)
        assert verify(cert)
        worst = max(worst, abs(cert.x), abs(cert.y), abs(cert.z))
    per = (time.perf_counter() - t0) / batch
    return per * 1e6, worst


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--batch", type=int, default=200, help="calls per measurement")
    p.add_argument("--max-decade", type=int, default=15, help="largest 10^k base")
    args = p.parse_args(argv)

    decades = [10**k for k in range(0, args.max_decade + 1) if 10**k <= REPRESENT_MAX]
    print(f"{'form':<10} " + " ".join(f"{f'1e{len(str(d)) - 1}':>9}" for d in decades))
    for form in MixedForm:
        cells = []
        for base in decades:
            us, worst = bench(form, base, min(args.batch, REPRESENT_MAX - base))
            cells.append(f"{us:>7.1f}us")
        print(f"{form.value:<10} " + " ".join(f"{c:>9}" for c in cells))

    print("\nlargest witness component at the ceiling:")
    for form in MixedForm:
        _, worst = bench(form, REPRESENT_MAX - 50, 50)
        print(f"  {form.value:<10} {worst}  ({worst.bit_length()} bits)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
