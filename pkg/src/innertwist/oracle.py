"""Brute-force oracle: CQT functionals by solving an ansatz exactly.

The unknowns are the entries of r on a declared support.  CQT1 and the
unit pairings r(eta x B) = r(B x eta) = eps are linear in r (the latter
follow from CQT2 and *-invertibility, so imposing them loses nothing) and
are eliminated with the exact linear solver.  The remaining CQT2
equations are quadratic in the surviving parameters and go to sympy.
Every solution is mapped back into the session field and re-verified
with :func:`check_cqt`; only verified candidates are returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .catcore import BraidedContext, Morphism
from .central import CentralBialgebra
from .cqt import check_cqt, pair_coalgebra
from .linalg import solve_linear
from .scalars import CycScalar

__all__ = ["CqtCandidate", "cqt_ansatz_solver", "parse_support"]


@dataclass(eq=False)
class CqtCandidate:
    r: Morphism
    parameters: dict = field(default_factory=dict)
    free: tuple = ()

    def describe(self) -> str:
        src = self.r.source
        terms = []
        for j, col in enumerate(self.r.cols):
            v = col.get(0)
            if v is not None:
                terms.append(f"r({src.label(j).replace('*', ',')}) = {v}")
        out = "; ".join(terms)
        if self.free:
            out += "  [free: " + ", ".join(f"{k}={self.parameters[k]}" for k in self.free) + "]"
        return out


def parse_support(text: str, CB: CentralBialgebra):
    """``"1,g;g,x"`` -> set of (i, j) basis index pairs; ``"all"`` -> None."""
    text = text.strip()
    if text in ("", "all", "*"):
        return None
    labels = {CB.carrier.label(i): i for i in range(CB.carrier.dim)}
    out = set()
    for item in text.split(";"):
        a, b = (s.strip() for s in item.split(","))
        try:
            out.add((labels[a], labels[b]))
        except KeyError as exc:
            raise ValueError(f"unknown basis label {exc.args[0]!r} in support") from None
    return out


def _to_sympy(c: CycScalar, z):
    return sum((sympy.Rational(q.numerator, q.denominator) * z ** k
                for k, q in enumerate(c.coeffs) if q), sympy.Integer(0))


def _from_sympy(val, ctx: BraidedContext, zval):
    F = ctx.field
    val = sympy.nsimplify(val) if not val.is_Rational else val
    if val.is_Rational:
        return F(Fraction(int(val.p), int(val.q)))
    if F.degree == 1:
        return None
    try:
        anp = sympy.polys.numberfields.to_number_field(val, zval)
    except (sympy.polys.polyerrors.IsomorphismFailed, NotImplementedError, ValueError):
        return None
    coeffs = [Fraction(int(q.numerator), int(q.denominator)) if hasattr(q, "numerator")
              else Fraction(str(q)) for q in reversed(anp.rep.to_list())]
    return F.from_poly(coeffs)


def cqt_ansatz_solver(ctx: BraidedContext, CB: CentralBialgebra, support=None,
                      samples=(1,)) -> list[CqtCandidate]:
    """All CQT functionals with the given support, up to parameter sampling.

    ``support`` is a set of (i, j) basis index pairs or None for every
    grade-compatible pair.  Free parameters of a solution family are
    instantiated with each value in ``samples``.
    """
    F = ctx.field
    Bo = CB.carrier
    B = CB.bialgebra
    n = Bo.dim
    g = ctx.grades(Bo)
    group = ctx.group
    slots = [(i, j) for i in range(n) for j in range(n)
             if group.add(g[i], g[j]) == group.zero
             and (support is None or (i, j) in support)]
    nv = len(slots)
    BBobj = Bo @ Bo

    def functional(vec):
        vals = [F.zero] * (n * n)
        for (i, j), v in zip(slots, vec):
            vals[i * n + j] = v
        return ctx.functional(BBobj, vals, check=False)

    basis = [functional([F.one if k == s else F.zero for k in range(nv)]) for s in range(nv)]
    IB = ctx.id(Bo)
    dBB = pair_coalgebra(ctx, CB).comult
    m_op = B.mult @ CB.innertwist

    # linear part: CQT1 and unit pairings
    def linear_image(r):
        return [m_op.tensor(r) @ dBB - r.tensor(B.mult) @ dBB,
                r @ B.unit.tensor(IB), r @ IB.tensor(B.unit)]

    images = [linear_image(r) for r in basis]
    targets = [ctx.zero(BBobj, Bo), B.counit, B.counit]
    rows, rhs = [], []
    for block, target in enumerate(targets):
        for c in range(target.source.dim):
            for t in range(target.target.dim):
                row = {}
                for s in range(nv):
                    v = images[s][block].entry(t, c)
                    if not v.is_zero():
                        row[s] = v
                val = target.entry(t, c)
                if row or not val.is_zero():
                    rows.append(row)
                    rhs.append(val)
    x0, null = solve_linear(rows, rhs, nv, F)
    if x0 is None:
        return []
    gens = [functional(x0)] + [functional(v) for v in null]
    k = len(null)

    # quadratic part: CQT2 in t_1..t_k, t_0 = 1
    z = sympy.Symbol("z")
    ts = sympy.symbols(f"t1:{k + 1}") if k else ()
    coef = (sympy.Integer(1),) + tuple(ts)
    X = ctx.tensor(IB, CB.innertwist, IB) @ ctx.tensor(IB, IB, B.comult)
    Y = ctx.tensor(B.comult, IB, IB)
    mB, Bm = B.mult.tensor(IB), IB.tensor(B.mult)
    exprs_a = [sympy.Integer(0)] * (n ** 3)
    exprs_b = [sympy.Integer(0)] * (n ** 3)

    def accumulate(target, f, weight):
        for c, col in enumerate(f.cols):
            v = col.get(0)
            if v is not None:
                target[c] += weight * _to_sympy(v, z)

    for a in range(k + 1):
        accumulate(exprs_a, gens[a] @ mB, coef[a])
        accumulate(exprs_b, gens[a] @ Bm, coef[a])
        for b in range(k + 1):
            w = coef[a] * coef[b]
            accumulate(exprs_a, gens[a].tensor(gens[b]) @ X, -w)
            accumulate(exprs_b, gens[a] @ ctx.tensor(IB, gens[b], IB) @ Y, -w)
    eqs = [sympy.expand(e) for e in exprs_a + exprs_b]
    eqs = [e for e in eqs if e != 0]
    unknowns = list(ts)
    if F.degree > 1:
        eqs.append(sum(c * z ** i for i, c in enumerate(F.modulus)))
        unknowns.append(z)
    zval_target = sympy.exp(2 * sympy.pi * sympy.I / F.n)
    if not eqs:
        solutions = [{}]
    else:
        solutions = sympy.solve(eqs, unknowns, dict=True)

    out, seen = [], set()
    for sol in solutions:
        zval = sol.get(z, None)
        if F.degree > 1:
            if zval is None or abs(complex(sympy.N(zval - zval_target))) > 1e-9:
                continue
        free = tuple(t for t in ts if t not in sol)
        for sample in (samples if free else (None,)):
            subs = {t: sympy.nsimplify(sample) for t in free}
            values = []
            ok = True
            for t in ts:
                expr = sympy.sympify(sol.get(t, t)).subs(subs)
                if F.degree > 1:
                    expr = expr.subs(z, zval)
                v = _from_sympy(sympy.simplify(expr), ctx, zval)
                if v is None:
                    ok = False
                    break
                values.append(v)
            if not ok:
                continue
            r = gens[0]
            for v, gen in zip(values, gens[1:]):
                r = r + gen.scale(v)
            key = tuple(r.entry(0, c) for c in range(n * n))
            if key in seen:
                continue
            rep, Q = check_cqt(ctx, CB, r.renamed("r"))
            if Q is None:
                continue
            seen.add(key)
            params = {str(t): str(v) for t, v in zip(ts, values)}
            out.append(CqtCandidate(r.renamed("r"), params, tuple(str(t) for t in free)))
    return out


def _all_pairs(n):
    return set(itertools.product(range(n), repeat=2))
