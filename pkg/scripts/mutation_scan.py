"""Perturb each structure constant of the kz3 demo by +1 and report which
checks catch the mutation."""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import replace

from innertwist.catcore import StructuralError
from innertwist.central import CentralBialgebra
from innertwist.examples import build_group_algebra_cqt
from innertwist.suite import SuiteOptions, bialgebra_tasks, run_tasks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=3)
    ap.add_argument("-k", type=int, default=1)
    args = ap.parse_args()
    ex = build_group_algebra_cqt(args.n, args.k)
    ctx, CB, r = ex.ctx, ex.central, ex.cqt.r
    H = CB.bialgebra
    options = SuiteOptions(threads=1)

    def failing(B, rr):
        rep = run_tasks(bialgebra_tasks(ctx, CentralBialgebra(B, CB.sigma), rr, None, options))
        return {rec.anchor for rec in rep.failures}

    mutants = []
    for part in ("mult", "comult"):
        f = getattr(H, part)
        for i in range(f.target.dim):
            for j in range(f.source.dim):
                try:
                    B = replace(H, **{part: f.with_entry(i, j, f.entry(i, j) + 1)})
                except StructuralError as exc:
                    mutants.append((part, i, j, {f"rejected: {exc}"}))
                    continue
                mutants.append((part, i, j, failing(B, r)))
    for j in range(r.source.dim):
        mutants.append(("r", 0, j, failing(H, r.with_entry(0, j, r.entry(0, j) + 1))))

    caught = Counter()
    missed = []
    for part, i, j, anchors in mutants:
        caught.update(anchors)
        if not anchors:
            missed.append((part, i, j))
    print(f"{len(mutants) - len(missed)}/{len(mutants)} mutations detected")
    print("checks by number of mutations caught:")
    for anchor, count in caught.most_common():
        print(f"  {count:>4}  {anchor}")
    for m in missed:
        print("undetected:", m)
    return 1 if missed else 0


if __name__ == "__main__":
    raise SystemExit(main())
