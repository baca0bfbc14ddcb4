"""Enumerate CQT structures on Sweedler's H4 and show S^2 via u."""

from __future__ import annotations

import argparse
from fractions import Fraction

from innertwist.cqt import antipode_square_via_u, check_cqt
from innertwist.examples import build_sweedler
from innertwist.oracle import cqt_ansatz_solver


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", default="0,1,2,-1/2",
                    help="comma-separated values for the free parameter")
    args = ap.parse_args()
    samples = tuple(Fraction(s) for s in args.samples.split(","))
    ex = build_sweedler()
    ctx, CB = ex.ctx, ex.central
    cands = cqt_ansatz_solver(ctx, CB, samples=samples)
    print(f"{len(cands)} CQT structure(s) on H4 for samples {', '.join(map(str, samples))}")
    for c in cands:
        _, Q = check_cqt(ctx, CB, c.r)
        print("  " + c.describe())
        S2 = antipode_square_via_u(ctx, Q)
        diag = [str(S2.entry(i, i)) for i in range(S2.source.dim)]
        print(f"    S^2 via u: diag({', '.join(diag)}), equals S o S: {S2 == CB.antipode @ CB.antipode}")
    return 0 if cands else 1


if __name__ == "__main__":
    raise SystemExit(main())
