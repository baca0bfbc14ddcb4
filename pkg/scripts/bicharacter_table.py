"""Extend the grouplike-point seed q = zeta_n to degree N and print r_(i,j)."""

from __future__ import annotations

import argparse

from innertwist.catcore import BraidedContext
from innertwist.tensoralg import (check_bicharacter, check_diagram_R, extend_bicharacter,
                                  grouplike_point)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=3, help="cyclotomic order of q")
    ap.add_argument("-N", "--degree", type=int, default=4)
    args = ap.parse_args()
    ctx = BraidedContext(args.n)
    P = grouplike_point(ctx)
    q = ctx.field.zeta()
    bc = extend_bicharacter(ctx, P, ctx.functional(P.carrier @ P.carrier, [q]), args.degree)
    width = max(len(str(f.entry(0, 0))) for f in bc.r.values()) + 2
    print("i\\j " + "".join(f"{j:>{width}}" for j in range(args.degree + 1)))
    for i in range(args.degree + 1):
        row = [str(bc.r[(i, j)].entry(0, 0)) if (i, j) in bc.r else "" for j in range(args.degree + 1)]
        print(f"{i:>3} " + "".join(f"{v:>{width}}" for v in row))
    rep = check_bicharacter(ctx, bc).extend(check_diagram_R(ctx, bc))
    print(rep.to_text().splitlines()[-1])
    return 0 if rep.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
