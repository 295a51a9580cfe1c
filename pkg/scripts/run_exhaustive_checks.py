#!/usr/bin/env python3
"""Run both invariance sweeps at full scale and print their summaries.

Exit status is nonzero if either sweep finds a violation, so this doubles
as a regression gate:

    python scripts/run_exhaustive_checks.py --bases 2..16 --workers 4
"""

import argparse
import sys
import time
from dataclasses import dataclass

from radixroot import fuzz_main1, fuzz_main2
from radixroot.cli import parse_base_range


@dataclass
class SweepConfig:
    bases: range
    bound: int
    terms: int
    n_bound: int
    s_bound: int
    workers: int


def run(config: SweepConfig) -> int:
    failed = 0
    started = time.perf_counter()
    summary = fuzz_main1(config.bases, config.bound, config.terms, workers=config.workers)
    elapsed = time.perf_counter() - started
    print(
        f"main1  tested={summary.tested} failed={summary.failed}"
        f" degenerate={summary.degenerate} ({elapsed:.2f}s)"
    )
    for failure in summary.failures:
        print(f"  FAIL {failure}")
    failed += summary.failed

    started = time.perf_counter()
    summary = fuzz_main2(config.bases, config.n_bound, config.s_bound, workers=config.workers)
    elapsed = time.perf_counter() - started
    print(
        f"main2  tested={summary.tested} skipped={summary.skipped}"
        f" failed={summary.failed} degenerate={summary.degenerate} ({elapsed:.2f}s)"
    )
    for failure in summary.failures:
        print(f"  FAIL {failure}")
    failed += summary.failed
    return 1 if failed else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bases", default="2..16")
    ap.add_argument("--bound", type=int, default=120)
    ap.add_argument("--terms", type=int, default=5)
    ap.add_argument("--n-bound", type=int, default=100)
    ap.add_argument("--s-bound", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    config = SweepConfig(
        bases=parse_base_range(args.bases),
        bound=args.bound,
        terms=args.terms,
        n_bound=args.n_bound,
        s_bound=args.s_bound,
        workers=args.workers,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
