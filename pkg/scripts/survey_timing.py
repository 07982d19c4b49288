#!/usr/bin/env python3
"""Per-entry timing profile of the catalog scan engine.

Runs every catalog entry (or one --source group) over [0, hi] and prints a
table sorted by wall time, slowest first.  Useful for spotting which
coefficient patterns make the oracle's enumeration expensive and for
checking that the chunked engine scales before raising desk-scale ranges.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from mixedsums.survey import SOURCES, verify_catalog


@dataclass(frozen=True)
class Config:
    hi: int
    source: str | None
    jobs: int


def parse_args(argv: list[str] | None = None) -> Config:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--hi", type=int, default=10_000, help="scan [0, hi] (default 10000)")
    p.add_argument("--source", choices=SOURCES, default=None)
    p.add_argument("--jobs", type=int, default=1)
    a = p.parse_args(argv)
    return Config(a.hi, a.source, a.jobs)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    reports = verify_catalog(cfg.source, 0, cfg.hi, jobs=cfg.jobs)
    reports = sorted(reports, key=lambda r: -r.wall_ms)
    width = max(len(r.entry.entry_id) for r in reports)
    print(f"{'entry':<{width}}  {'wall_ms':>8}  {'verified':>9}  counterexamples")
    for r in reports:
        bad = ";".join(map(str, r.counterexamples)) or "-"
        print(f"{r.entry.entry_id:<{width}}  {r.wall_ms:>8}  {r.verified_count:>9}  {bad}")
    total = sum(r.wall_ms for r in reports)
    print(f"\n{len(reports)} entries, {total} ms total on [0, {cfg.hi}], jobs={cfg.jobs}")
    return 1 if any(r.counterexamples for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
