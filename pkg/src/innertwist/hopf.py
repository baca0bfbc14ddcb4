"""Coalgebras, algebras, bialgebras and Hopf algebras in a braided context.

Includes the convolution product on Mor(C, A), exact convolution inversion
by linear solve (which is how antipodes are found), and the check suites for
the structure axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .catcore import UNIT, BraidedContext, GradedObject, Morphism, StructuralError
from .linalg import solve_linear
from .report import Report, compare

__all__ = [
    "Coalgebra",
    "Algebra",
    "Bialgebra",
    "unit_coalgebra",
    "unit_algebra",
    "check_coalgebra",
    "check_algebra",
    "check_bialgebra",
    "check_antipode",
    "check_antipode_anti_morphism",
    "tensor_coalgebra",
    "tensor_algebra_struct",
    "convolution",
    "convolution_unit",
    "convolution_inverse",
    "solve_antipode",
    "comult2",
]


@dataclass(frozen=True, eq=False)
class Coalgebra:
    carrier: GradedObject
    comult: Morphism
    counit: Morphism
    name: str = ""

    def __post_init__(self):
        C = self.carrier
        if (self.comult.source, self.comult.target) != (C, C @ C):
            raise StructuralError(f"coalgebra {self.name}: comult must be {C.name} -> {C.name}*{C.name}")
        if (self.counit.source, self.counit.target) != (C, UNIT):
            raise StructuralError(f"coalgebra {self.name}: counit must be {C.name} -> I")


@dataclass(frozen=True, eq=False)
class Algebra:
    carrier: GradedObject
    mult: Morphism
    unit: Morphism
    name: str = ""

    def __post_init__(self):
        A = self.carrier
        if (self.mult.source, self.mult.target) != (A @ A, A):
            raise StructuralError(f"algebra {self.name}: mult must be {A.name}*{A.name} -> {A.name}")
        if (self.unit.source, self.unit.target) != (UNIT, A):
            raise StructuralError(f"algebra {self.name}: unit must be I -> {A.name}")


@dataclass(frozen=True, eq=False)
class Bialgebra:
    """Bialgebra; a Hopf algebra when ``antipode`` is set."""

    carrier: GradedObject
    mult: Morphism
    unit: Morphism
    comult: Morphism
    counit: Morphism
    antipode: Morphism | None = None
    name: str = ""

    def __post_init__(self):
        # validates shapes
        self.algebra
        self.coalgebra
        if self.antipode is not None:
            B = self.carrier
            if (self.antipode.source, self.antipode.target) != (B, B):
                raise StructuralError(f"antipode of {self.name} must be an endomorphism")

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.carrier, self.mult, self.unit, self.name)

    @property
    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.carrier, self.comult, self.counit, self.name)

    @property
    def is_hopf(self) -> bool:
        return self.antipode is not None

    def with_antipode(self, S: Morphism | None) -> Bialgebra:
        return replace(self, antipode=S)

    def with_mult(self, m: Morphism) -> Bialgebra:
        return replace(self, mult=m)


def unit_coalgebra(ctx: BraidedContext) -> Coalgebra:
    return Coalgebra(UNIT, ctx.id(UNIT), ctx.id(UNIT), "I")


def unit_algebra(ctx: BraidedContext) -> Algebra:
    return Algebra(UNIT, ctx.id(UNIT), ctx.id(UNIT), "I")


def comult2(C) -> Morphism:
    """Iterated coproduct (Delta x id) Delta."""
    I = Morphism.identity(C.carrier, C.comult.field)
    return C.comult.tensor(I) @ C.comult


# --- checks


def _grade_record(ctx, anchor, fs, inst):
    bad = [(f.name or anchor, f.grade_violations(ctx.group)) for f in fs]
    bad = [(n, v[0]) for n, v in bad if v]
    return Report.boolean(anchor, not bad, inst,
                          {"morphism": bad[0][0], "entry": bad[0][1]} if bad else None)


def check_coalgebra(ctx: BraidedContext, C: Coalgebra, instance: str = "") -> Report:
    inst = instance or C.name
    I = ctx.id(C.carrier)
    d, e = C.comult, C.counit
    rep = Report()
    rep.add(_grade_record(ctx, "coalgebra grade preserving", [d, e], inst))
    rep.add(compare("coassociativity", d.tensor(I) @ d, I.tensor(d) @ d, inst))
    rep.add(compare("left counit", e.tensor(I) @ d, I, inst))
    rep.add(compare("right counit", I.tensor(e) @ d, I, inst))
    return rep


def check_algebra(ctx: BraidedContext, A: Algebra, instance: str = "") -> Report:
    inst = instance or A.name
    I = ctx.id(A.carrier)
    m, u = A.mult, A.unit
    rep = Report()
    rep.add(_grade_record(ctx, "algebra grade preserving", [m, u], inst))
    rep.add(compare("associativity", m @ m.tensor(I), m @ I.tensor(m), inst))
    rep.add(compare("left unit", m @ u.tensor(I), I, inst))
    rep.add(compare("right unit", m @ I.tensor(u), I, inst))
    return rep


def check_bialgebra(ctx: BraidedContext, B: Bialgebra, instance: str = "") -> Report:
    """Algebra and coalgebra axioms plus the four compatibility identities."""
    inst = instance or B.name
    I = ctx.id(B.carrier)
    m, u, d, e = B.mult, B.unit, B.comult, B.counit
    rep = check_coalgebra(ctx, B.coalgebra, inst)
    rep.extend(check_algebra(ctx, B.algebra, inst))
    tau = ctx.braiding(B.carrier, B.carrier)
    rep.add(compare("bialgebra comult-mult", d @ m,
                    m.tensor(m) @ ctx.tensor(I, tau, I) @ d.tensor(d), inst))
    rep.add(compare("bialgebra counit-mult", e @ m, e.tensor(e), inst))
    rep.add(compare("bialgebra comult-unit", d @ u, u.tensor(u), inst))
    rep.add(compare("bialgebra counit-unit", e @ u, ctx.id(UNIT), inst))
    return rep


def check_antipode(ctx: BraidedContext, B: Bialgebra, S: Morphism | None = None,
                   mult: Morphism | None = None, instance: str = "",
                   anchor: str = "antipode") -> Report:
    """m(S x id)Delta = eta eps = m(id x S)Delta for the given (or own) S and m."""
    inst = instance or B.name
    S = S if S is not None else B.antipode
    m = mult if mult is not None else B.mult
    rep = Report()
    if S is None:
        rep.add(Report.skipped(anchor + " left", inst, "no antipode"))
        rep.add(Report.skipped(anchor + " right", inst, "no antipode"))
        return rep
    I = ctx.id(B.carrier)
    ue = B.unit @ B.counit
    rep.add(compare(anchor + " left", m @ S.tensor(I) @ B.comult, ue, inst))
    rep.add(compare(anchor + " right", m @ I.tensor(S) @ B.comult, ue, inst))
    return rep


def check_antipode_anti_morphism(ctx: BraidedContext, H: Bialgebra, instance: str = "") -> Report:
    inst = instance or H.name
    rep = Report()
    S = H.antipode
    if S is None:
        for a in ("antipode anti-coalgebra", "antipode anti-algebra",
                  "antipode counit", "antipode unit"):
            rep.add(Report.skipped(a, inst, "no antipode"))
        return rep
    tau = ctx.braiding(H.carrier, H.carrier)
    rep.add(compare("antipode anti-coalgebra", H.comult @ S, tau @ S.tensor(S) @ H.comult, inst))
    rep.add(compare("antipode anti-algebra", S @ H.mult, H.mult @ tau @ S.tensor(S), inst))
    rep.add(compare("antipode counit", H.counit @ S, H.counit, inst))
    rep.add(compare("antipode unit", S @ H.unit, H.unit, inst))
    return rep


# --- braided tensor products


def tensor_coalgebra(ctx: BraidedContext, C: Coalgebra, D: Coalgebra) -> Coalgebra:
    """Delta_{C*D} = (C x tau_{C,D} x D)(Delta_C x Delta_D)."""
    IC, ID = ctx.id(C.carrier), ctx.id(D.carrier)
    mid = ctx.tensor(IC, ctx.braiding(C.carrier, D.carrier), ID)
    d = mid @ C.comult.tensor(D.comult)
    e = C.counit.tensor(D.counit)
    name = f"{C.name}*{D.name}" if C.name and D.name else ""
    return Coalgebra(C.carrier @ D.carrier, d, e, name)


def tensor_algebra_struct(ctx: BraidedContext, A: Algebra, B: Algebra) -> Algebra:
    """m_{A*B} = (m_A x m_B)(A x tau_{B,A} x B)."""
    IA, IB = ctx.id(A.carrier), ctx.id(B.carrier)
    mid = ctx.tensor(IA, ctx.braiding(B.carrier, A.carrier), IB)
    m = A.mult.tensor(B.mult) @ mid
    u = A.unit.tensor(B.unit)
    name = f"{A.name}*{B.name}" if A.name and B.name else ""
    return Algebra(A.carrier @ B.carrier, m, u, name)


# --- convolution


def convolution(ctx: BraidedContext, f: Morphism, g: Morphism, C: Coalgebra,
                A: Algebra | None = None) -> Morphism:
    """f * g = m_A (f x g) Delta_C; functionals when A is omitted."""
    A = A if A is not None else unit_algebra(ctx)
    for h in (f, g):
        if h.source != C.carrier:
            raise StructuralError(f"convolution: source {h.source.name} is not {C.carrier.name}")
        if h.target != A.carrier:
            raise StructuralError(f"convolution: target {h.target.name} is not {A.carrier.name}")
    return A.mult @ f.tensor(g) @ C.comult


def convolution_unit(ctx: BraidedContext, C: Coalgebra, A: Algebra | None = None) -> Morphism:
    A = A if A is not None else unit_algebra(ctx)
    return A.unit @ C.counit


def convolution_inverse(ctx: BraidedContext, f: Morphism, C: Coalgebra,
                        A: Algebra | None = None) -> Morphism | None:
    """Two-sided convolution inverse of f in Mor(C, A), or None.

    Unknowns are the grade-preserving entries of the inverse; both
    ``X * f = unit`` and ``f * X = unit`` are imposed and solved exactly.
    """
    A = A if A is not None else unit_algebra(ctx)
    if f.source != C.carrier or f.target != A.carrier:
        raise StructuralError("convolution_inverse: f must be a morphism C -> A")
    field = ctx.field
    Cobj, Aobj = C.carrier, A.carrier
    dc, da = Cobj.dim, Aobj.dim
    gc, ga = ctx.grades(Cobj), ctx.grades(Aobj)
    var = {}
    for a in range(dc):
        for i in range(da):
            if ga[i] == gc[a]:
                var[(i, a)] = len(var)
    mcols = A.mult.cols
    unit = convolution_unit(ctx, C, A)
    rows, rhs = [], []
    zero = field.zero
    for side in (0, 1):
        for c in range(dc):
            eqs = {}
            for p, d in C.comult.cols[c].items():
                a, b = divmod(p, dc)
                known, unknown = (b, a) if side == 0 else (a, b)
                for k, fv in f.cols[known].items():
                    df = d * fv
                    for i in range(da):
                        key = (i, unknown)
                        if key not in var:
                            continue
                        col = mcols[i * da + k] if side == 0 else mcols[k * da + i]
                        for t, mu in col.items():
                            row = eqs.setdefault(t, {})
                            v = var[key]
                            row[v] = row.get(v, zero) + df * mu
            target = unit.cols[c]
            for t in range(da):
                row = {k: v for k, v in eqs.get(t, {}).items() if not v.is_zero()}
                val = target.get(t, zero)
                if row or not val.is_zero():
                    rows.append(row)
                    rhs.append(val)
    x, _ = solve_linear(rows, rhs, len(var), field)
    if x is None:
        return None
    cols = [{} for _ in range(dc)]
    for (i, a), v in var.items():
        if not x[v].is_zero():
            cols[a][i] = x[v]
    inv = Morphism(Cobj, Aobj, field, cols)
    # two-sidedness is imposed by the system; re-verify exactly
    if convolution(ctx, inv, f, C, A) != unit or convolution(ctx, f, inv, C, A) != unit:
        return None
    return inv


def solve_antipode(ctx: BraidedContext, B: Bialgebra) -> Morphism | None:
    """The convolution inverse of id_B in End(B), or None if B is not Hopf."""
    S = convolution_inverse(ctx, ctx.id(B.carrier), B.coalgebra, B.algebra)
    return S.renamed("S") if S is not None else None
