"""Run the full suite on every shipped example and print a summary table."""

from __future__ import annotations

import argparse
import time

from innertwist.examples import (build_exterior_line, build_exterior_square,
                                 build_group_algebra_cqt, build_group_algebra_square,
                                 build_sweedler)
from innertwist.suite import SuiteOptions, run_suite


def examples():
    for n in (1, 2, 3, 4, 6):
        for k in range(n):
            yield f"kz n={n} k={k}", lambda n=n, k=k: build_group_algebra_cqt(n, k)
    yield "sweedler", build_sweedler
    yield "exterior alpha=0", build_exterior_line
    yield "kz2 x kz2", build_group_algebra_square
    yield "exterior x exterior", build_exterior_square


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--verbose", action="store_true", help="print failing records")
    args = ap.parse_args()
    options = SuiteOptions(threads=args.threads)
    bad = 0
    print(f"{'example':<22} {'checks':>6} {'failed':>6} {'skipped':>7} {'time':>7}")
    for label, make in examples():
        start = time.perf_counter()
        rep = run_suite(make(), options)
        elapsed = time.perf_counter() - start
        skipped = sum(r.status == "skipped" for r in rep)
        print(f"{label:<22} {len(rep):>6} {len(rep.failures):>6} {skipped:>7} {elapsed:>6.2f}s")
        if args.verbose:
            for rec in rep.failures:
                print("    " + rec.line())
        bad += not rep.passed
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
