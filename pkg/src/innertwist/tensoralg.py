"""Central bialgebras built from central coalgebras.

* the tensor bialgebra on a central coalgebra C, truncated at degree N.
  Each tensor power C^k is a subcoalgebra.  Products landing above degree N
  are dropped, so the direct sum is an algebra and a coalgebra, but the
  bialgebra compatibility only holds in degrees i + j <= N, which is where
  it is checked;
* bicharacters on the tensor-power diagram, grown from a seed r_{1,1} by
  the two multiplicativity recursions, and the operators R_{i,j};
* the matrix coalgebra V* x V of a rigid object with its half-braiding;
* the centrality test for comodules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catcore import UNIT, BraidedContext, GradedObject, Morphism, Space, StructuralError
from .central import CentralBialgebra, HalfBraiding, check_center_coalgebra, check_central_axioms
from .hopf import (Bialgebra, Coalgebra, check_algebra, check_coalgebra, comult2,
                   convolution_inverse, tensor_coalgebra, unit_coalgebra)
from .report import Report, compare

__all__ = [
    "CentralCoalgebra",
    "check_central_coalgebra",
    "grouplike_point",
    "dual_coalgebra",
    "TruncatedTensorBialgebra",
    "truncated_tensor_bialgebra",
    "check_truncated_tensor_bialgebra",
    "DiagramBicharacter",
    "BicharacterError",
    "extend_bicharacter",
    "check_bicharacter",
    "diagram_R",
    "check_diagram_R",
    "check_comodule_central",
]


@dataclass(frozen=True, eq=False)
class CentralCoalgebra:
    coalgebra: Coalgebra
    sigma: HalfBraiding

    def __post_init__(self):
        if self.sigma.owner != self.coalgebra.carrier:
            raise StructuralError("half-braiding owner differs from the coalgebra carrier")

    @property
    def carrier(self) -> GradedObject:
        return self.coalgebra.carrier

    @property
    def name(self) -> str:
        return self.coalgebra.name or self.carrier.name


def check_central_coalgebra(ctx: BraidedContext, CC: CentralCoalgebra, tests=None,
                            morphisms=(), instance: str = "") -> Report:
    rep = check_coalgebra(ctx, CC.coalgebra, instance or CC.name)
    rep.extend(check_center_coalgebra(ctx, CC.coalgebra, CC.sigma,
                                      tests if tests is not None else [CC.coalgebra],
                                      morphisms, instance or CC.name))
    return rep


def grouplike_point(ctx: BraidedContext, name: str = "P") -> CentralCoalgebra:
    """A one-dimensional coalgebra spanned by a grouplike, sigma = tau."""
    P = ctx.space(name, [name.lower()])
    c = Coalgebra(P, ctx.sparse(P, P @ P, {(0, 0): 1}, "Delta"),
                  ctx.functional(P, [1], "eps"), name)
    return CentralCoalgebra(c, HalfBraiding.braiding(ctx, P))


def dual_coalgebra(ctx: BraidedContext, V: GradedObject) -> CentralCoalgebra:
    """V* x V with Delta = V* x db x V, eps = ev and the mixed half-braiding

        sigma(N) = (tau_{N,V*}^{-1} x V)(V* x tau_{V,N}).
    """
    Vs, ev, db = ctx.dual_object(V)
    D = Vs @ V
    IVs, IV = ctx.id(Vs), ctx.id(V)
    c = Coalgebra(D, ctx.tensor(IVs, db, IV).renamed("Delta"), ev.renamed("eps"),
                  f"{V.name}^*{V.name}")

    def rule(N: GradedObject) -> Morphism:
        return ctx.braiding_inverse(N, Vs).tensor(IV) @ IVs.tensor(ctx.braiding(V, N))

    return CentralCoalgebra(c, HalfBraiding(ctx, D, rule=rule))


# --- truncated tensor bialgebra


@dataclass(eq=False)
class TruncatedTensorBialgebra:
    """Components C^0 = I, ..., C^N and their direct sum T as a central bialgebra."""

    base: CentralCoalgebra
    degree: int
    components: list            # Coalgebra on C^k
    sigmas: list                # HalfBraiding on C^k
    total: CentralBialgebra     # the direct sum T
    injections: list            # a_k: C^k -> T
    offsets: list = field(default_factory=list)

    def power(self, k: int) -> GradedObject:
        return self.components[k].carrier


def _power_sigma(ctx, CC: CentralCoalgebra, k: int) -> HalfBraiding:
    if k == 0:
        return HalfBraiding(ctx, UNIT, rule=lambda N: ctx.id(N))
    hb = CC.sigma
    for _ in range(k - 1):
        hb = HalfBraiding.product(hb, CC.sigma)
    return hb


def truncated_tensor_bialgebra(ctx: BraidedContext, CC: CentralCoalgebra,
                               N: int) -> TruncatedTensorBialgebra:
    if N < 1:
        raise ValueError("degree bound must be at least 1")
    comps = [unit_coalgebra(ctx), CC.coalgebra]
    for _ in range(2, N + 1):
        comps.append(tensor_coalgebra(ctx, comps[-1], CC.coalgebra))
    sigmas = [_power_sigma(ctx, CC, k) for k in range(N + 1)]

    # the direct sum as a single simple object
    labels, offsets = [], []
    for k, c in enumerate(comps):
        offsets.append(len(labels))
        g = ctx.grades(c.carrier)
        for i in range(c.carrier.dim):
            labels.append((f"{k}:{c.carrier.label(i) if k else '1'}", g[i]))
    T = GradedObject((Space(f"T{N}({CC.name})", tuple(l for l, _ in labels),
                            tuple(g for _, g in labels)),))
    dT = T.dim
    inj = [ctx.sparse(c.carrier, T, {(offsets[k] + i, i): 1 for i in range(c.carrier.dim)},
                      f"a{k}") for k, c in enumerate(comps)]
    ment, dent, eps = {}, {}, [0] * dT
    for i in range(N + 1):
        di = comps[i].carrier.dim
        for j in range(N + 1 - i):
            dj = comps[j].carrier.dim
            for p in range(di):
                for q in range(dj):
                    # concatenation: C^i x C^j = C^{i+j} as tensor words
                    ment[(offsets[i + j] + p * dj + q, (offsets[i] + p) * dT + offsets[j] + q)] = 1
        for col, entries in enumerate(comps[i].comult.cols):
            for row, v in entries.items():
                a, b = divmod(row, di)
                dent[((offsets[i] + a) * dT + offsets[i] + b, offsets[i] + col)] = v
        for col, entries in enumerate(comps[i].counit.cols):
            if 0 in entries:
                eps[offsets[i] + col] = entries[0]
    m = ctx.sparse(T @ T, T, ment, "m")
    d = ctx.sparse(T, T @ T, dent, "Delta")
    e = ctx.functional(T, eps, "eps")
    B = Bialgebra(T, m, inj[0].renamed("eta"), d, e, None, T.name)

    def sigma_T(Nobj: GradedObject) -> Morphism:
        # sum over degrees of (N x a_k) sigma_k(N) (a_k^dual x N)
        cols = [{} for _ in range(dT * Nobj.dim)]
        dn = Nobj.dim
        for k in range(N + 1):
            s = sigmas[k].component(Nobj)
            dk = comps[k].carrier.dim
            for p in range(dk):
                for n_ in range(dn):
                    src = (offsets[k] + p) * dn + n_
                    for row, v in s.cols[p * dn + n_].items():
                        n2, p2 = divmod(row, dk)
                        cols[src][n2 * dT + offsets[k] + p2] = v
        return Morphism(T @ Nobj, Nobj @ T, ctx.field, cols)

    total = CentralBialgebra(B, HalfBraiding(ctx, T, rule=sigma_T))
    return TruncatedTensorBialgebra(CC, N, comps, sigmas, total, inj, offsets)


def check_truncated_tensor_bialgebra(ctx: BraidedContext, TT: TruncatedTensorBialgebra,
                                     full: bool | None = None, instance: str = "") -> Report:
    """Degree-wise coherence, injection compatibility and the central axioms.

    ``full`` also runs the coalgebra, algebra and central axioms on the
    direct sum (default: only when it has at most 40 basis vectors).
    """
    N = TT.degree
    inst0 = instance or TT.total.name
    rep = Report()
    T = TT.total.bialgebra
    for k, c in enumerate(TT.components):
        inst = f"{inst0}; degree {k}"
        rep.extend(check_coalgebra(ctx, c, inst))
        rep.add(compare("injection coalgebra morphism", T.comult @ TT.injections[k],
                        TT.injections[k].tensor(TT.injections[k]) @ c.comult, inst))
        rep.add(compare("injection counit", T.counit @ TT.injections[k], c.counit, inst))
    for i in range(N + 1):
        for j in range(N + 1 - i):
            inst = f"{inst0}; degrees ({i},{j})"
            ci, cj = TT.components[i], TT.components[j]
            prod = tensor_coalgebra(ctx, ci, cj)
            rep.add(compare("degree-bounded Delta m", TT.components[i + j].comult, prod.comult, inst))
            rep.add(compare("degree-bounded eps m", TT.components[i + j].counit, prod.counit, inst))
            rep.add(compare("injection compatibility", T.mult @ TT.injections[i].tensor(TT.injections[j]),
                            TT.injections[i + j], inst))
    # sigma on the direct sum restricts to the hexagon-extended sigma on each C^k
    C = TT.base.carrier
    for k in range(N + 1):
        a = TT.injections[k]
        rep.add(compare("sigma on components", TT.total.sigma.component(C) @ a.tensor(ctx.id(C)),
                        ctx.id(C).tensor(a) @ TT.sigmas[k].component(C), f"{inst0}; degree {k}"))
    if full is None:
        full = T.carrier.dim <= 40
    if full:
        rep.extend(check_coalgebra(ctx, T.coalgebra, inst0))
        rep.extend(check_algebra(ctx, T.algebra, inst0))
        rep.extend(check_central_axioms(ctx, TT.total, [TT.base.coalgebra], instance=inst0))
    return rep


# --- bicharacters on the tensor-power diagram


class BicharacterError(StructuralError):
    pass


@dataclass(eq=False)
class DiagramBicharacter:
    base: CentralCoalgebra
    degree: int
    components: list            # coalgebras C^k
    sigmas: list                # half-braidings on C^k
    r: dict                     # (i, j) -> functional on C^i x C^j
    r_inv: dict

    def pair(self, i, j) -> Coalgebra:
        return tensor_coalgebra(self.base.sigma.ctx, self.components[i], self.components[j])


def _first_recursion(ctx, comps, r, i, j, k):
    """r_{i,j+k} = r_{i,k}(C^i x r_{i,j} x C^k)(Delta_i x C^j x C^k)."""
    Ii, Ij, Ik = (ctx.id(comps[t].carrier) for t in (i, j, k))
    return (r[(i, k)] @ ctx.tensor(Ii, r[(i, j)], Ik)
            @ ctx.tensor(comps[i].comult, Ij, Ik))


def _second_recursion(ctx, comps, sigmas, r, i, j, k):
    """r_{i+j,k} = (r_{i,k} x r_{j,k})(C^i x sigma_{C^j}(C^k) x C^k)(C^i x C^j x Delta_k)."""
    Ii, Ij, Ik = (ctx.id(comps[t].carrier) for t in (i, j, k))
    s = sigmas[j].component(comps[k].carrier)
    return (r[(i, k)].tensor(r[(j, k)]) @ ctx.tensor(Ii, s, Ik)
            @ ctx.tensor(Ii, Ij, comps[k].comult))


def extend_bicharacter(ctx: BraidedContext, CC: CentralCoalgebra, seed: Morphism,
                       N: int) -> DiagramBicharacter:
    """Fill r_{i,j} for i + j <= N from r_{1,1} = seed."""
    C = CC.carrier
    if (seed.source, seed.target) != (C @ C, UNIT):
        raise StructuralError(f"seed must be a functional on {C.name}*{C.name}")
    if N < 2:
        raise ValueError("degree bound must be at least 2")
    comps = [unit_coalgebra(ctx), CC.coalgebra]
    for _ in range(2, N + 1):
        comps.append(tensor_coalgebra(ctx, comps[-1], CC.coalgebra))
    sigmas = [_power_sigma(ctx, CC, k) for k in range(N + 1)]
    r = {}
    for k in range(N + 1):
        r[(0, k)] = comps[k].counit
        r[(k, 0)] = comps[k].counit
    r[(1, 1)] = seed
    for i in range(1, N + 1):
        for j in range(1, N + 1 - i):
            if (i, j) in r:
                continue
            if j == 1:
                r[(i, 1)] = _second_recursion(ctx, comps, sigmas, r, i - 1, 1, 1)
            else:
                r[(i, j)] = _first_recursion(ctx, comps, r, i, j - 1, 1)
    r_inv = {}
    for (i, j), f in sorted(r.items()):
        inv = convolution_inverse(ctx, f, tensor_coalgebra(ctx, comps[i], comps[j]))
        if inv is None:
            raise BicharacterError(f"r_{{{i},{j}}} is not *-invertible (at i={i}, j={j})")
        r_inv[(i, j)] = inv
    return DiagramBicharacter(CC, N, comps, sigmas, r, r_inv)


def check_bicharacter(ctx: BraidedContext, bc: DiagramBicharacter, instance: str = "") -> Report:
    """Both recursions at every triple with i + j + k <= N, and *-invertibility."""
    inst0 = instance or bc.base.name
    N = bc.degree
    rep = Report()
    for i in range(1, N + 1):
        for j in range(1, N + 1 - i):
            for k in range(1, N + 1 - i - j):
                inst = f"{inst0}; ({i},{j},{k})"
                rep.add(compare("bicharacter r_{i,j+k}", bc.r[(i, j + k)],
                                _first_recursion(ctx, bc.components, bc.r, i, j, k), inst))
                rep.add(compare("bicharacter r_{i+j,k}", bc.r[(i + j, k)],
                                _second_recursion(ctx, bc.components, bc.sigmas, bc.r, i, j, k),
                                inst))
    for (i, j), f in sorted(bc.r.items()):
        pair = bc.pair(i, j)
        inv = bc.r_inv[(i, j)]
        inst = f"{inst0}; ({i},{j})"
        rep.add(compare("r_{i,j} *-invertible (right)", f.tensor(inv) @ pair.comult, pair.counit, inst))
        rep.add(compare("r_{i,j} *-invertible (left)", inv.tensor(f) @ pair.comult, pair.counit, inst))
    return rep


def diagram_R(ctx: BraidedContext, bc: DiagramBicharacter, i: int, j: int) -> Morphism:
    """R_{i,j} = (r^{-1}_{i,j} x sigma_{C^i}(C^j) x r_{i,j}) Delta^(2): C^i C^j -> C^j C^i."""
    if (i, j) not in bc.r:
        raise ValueError(f"R_{{{i},{j}}} needs i + j <= {bc.degree}")
    s = bc.sigmas[i].component(bc.components[j].carrier)
    R = ctx.tensor(bc.r_inv[(i, j)], s, bc.r[(i, j)]) @ comult2(bc.pair(i, j))
    return R.renamed(f"R_{i},{j}")


def check_diagram_R(ctx: BraidedContext, bc: DiagramBicharacter, instance: str = "") -> Report:
    """Coalgebra isomorphism property of every R_{i,j}, the hexagon-style
    composition laws across degrees, and the braid relation on C^3."""
    inst0 = instance or bc.base.name
    N = bc.degree
    C = bc.components
    Rs = {(i, j): diagram_R(ctx, bc, i, j) for (i, j) in bc.r}
    rep = Report()
    for (i, j), R in sorted(Rs.items()):
        inst = f"{inst0}; ({i},{j})"
        src, tgt = bc.pair(i, j), tensor_coalgebra(ctx, C[j], C[i])
        rep.add(compare("R_{i,j} coalgebra morphism", tgt.comult @ R, R.tensor(R) @ src.comult, inst))
        rep.add(compare("R_{i,j} counit", tgt.counit @ R, src.counit, inst))
        rep.add(Report.boolean("R_{i,j} invertible", R.inverse() is not None, inst,
                               {"reason": "singular"}))
    for i in range(1, N + 1):
        for j in range(1, N + 1 - i):
            for k in range(1, N + 1 - i - j):
                inst = f"{inst0}; ({i},{j},{k})"
                Ii, Ij, Ik = (ctx.id(C[t].carrier) for t in (i, j, k))
                rep.add(compare("R hexagon 1", Rs[(i, j + k)],
                                Ij.tensor(Rs[(i, k)]) @ Rs[(i, j)].tensor(Ik), inst))
                rep.add(compare("R hexagon 2", Rs[(i + j, k)],
                                Rs[(i, k)].tensor(Ij) @ Ii.tensor(Rs[(j, k)]), inst))
    if N >= 2:
        R = Rs[(1, 1)]
        I1 = ctx.id(C[1].carrier)
        R1, R2 = R.tensor(I1), I1.tensor(R)
        rep.add(compare("R_{1,1} braid relation", R1 @ R2 @ R1, R2 @ R1 @ R2, inst0))
    return rep


# --- central comodules


def check_comodule_central(ctx: BraidedContext, V: GradedObject, CB: CentralBialgebra,
                           rho: Morphism, tests=None, instance: str = "") -> Report:
    """Coaction axioms, then b = (ev x B)(V* x rho) as a morphism of central coalgebras."""
    B = CB.bialgebra
    inst = instance or f"{V.name} over {B.name}"
    IV, IB = ctx.id(V), ctx.id(B.carrier)
    rep = Report()
    if (rho.source, rho.target) != (V, V @ B.carrier):
        raise StructuralError(f"coaction must be {V.name} -> {V.name}*{B.carrier.name}")
    pre = [compare("coaction coassociative", rho.tensor(IB) @ rho, IV.tensor(B.comult) @ rho, inst),
           compare("coaction counital", IV.tensor(B.counit) @ rho, IV, inst)]
    rep.records.extend(pre)
    if any(p.failed for p in pre):
        rep.add(Report.skipped("comodule central", inst, "precondition: not a coaction"))
        return rep
    D = dual_coalgebra(ctx, V)
    Vs = D.carrier.factors[0]
    Vs_obj = GradedObject((Vs,))
    _, ev, _ = ctx.dual_object(V)
    b = (ev.tensor(IB) @ ctx.id(Vs_obj).tensor(rho)).renamed("b")
    rep.add(compare("b coalgebra morphism", B.comult @ b, b.tensor(b) @ D.coalgebra.comult, inst))
    rep.add(compare("b counit", B.counit @ b, D.coalgebra.counit, inst))
    tests = tests if tests is not None else [B.carrier, D.carrier]
    for Nobj in tests:
        IN = ctx.id(Nobj)
        rep.add(compare("b intertwines sigma", IN.tensor(b) @ D.sigma.component(Nobj),
                        CB.sigma.component(Nobj) @ b.tensor(IN), f"{inst}; N={Nobj.name}"))
    return rep
