"""Coquasitriangular (CQT) structures on central bialgebras.

A CQT structure is a functional r: B*B -> I comparing the product m with
the twisted product m^op = m sigma.  Everything is derived from r: the
convolution inverse r^{-1} on the tensor coalgebra B*B, the companion
r* = r^{-1} sigma^{-1} (so that r* sigma is the inverse of r), and on Hopf
algebras the functionals u, u* that express S^2 and S^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catcore import UNIT, BraidedContext, Morphism, StructuralError
from .central import CentralBialgebra
from .hopf import comult2, convolution, convolution_inverse, tensor_coalgebra
from .report import Report, compare

__all__ = [
    "CqtStructure",
    "pair_coalgebra",
    "check_cqt",
    "check_rsm",
    "check_r_sigma_commute",
    "check_lemma_rrs",
    "check_unit_pairings",
    "compute_u",
    "compute_u_star",
    "check_u_definitions",
    "check_lemma_uu",
    "check_u_inverse",
    "antipode_square_via_u",
    "antipode_inverse_via_u",
    "check_antipode_formulas",
    "yang_baxter_operator",
    "check_yang_baxter",
]


@dataclass(frozen=True, eq=False)
class CqtStructure:
    base: CentralBialgebra
    r: Morphism
    r_inv: Morphism
    r_star: Morphism
    u: Morphism | None = None
    u_star: Morphism | None = None

    @property
    def name(self):
        return self.base.name


def pair_coalgebra(ctx: BraidedContext, CB: CentralBialgebra):
    """The tensor coalgebra B*B, on which r is convolution-inverted."""
    c = CB.bialgebra.coalgebra
    return tensor_coalgebra(ctx, c, c)


def _require_functional(CB: CentralBialgebra, r: Morphism):
    B = CB.carrier
    if (r.source, r.target) != (B @ B, UNIT):
        raise StructuralError(f"r must be a functional {B.name}*{B.name} -> I")


def check_cqt(ctx: BraidedContext, CB: CentralBialgebra, r: Morphism,
              instance: str = ""):
    """CQT1-CQT3 for r; returns (report, CqtStructure or None)."""
    _require_functional(CB, r)
    inst = instance or CB.name
    B = CB.bialgebra
    IB = ctx.id(B.carrier)
    m = B.mult
    s = CB.innertwist
    s_inv = CB.innertwist_inverse
    BB = pair_coalgebra(ctx, CB)
    dBB = BB.comult
    rep = Report()
    bad = r.grade_violations(ctx.group)
    rep.add(Report.boolean("r grade preserving", not bad, inst,
                           {"entry": bad[0]} if bad else None))
    m_op = m @ s
    rep.add(compare("CQT1", m_op.tensor(r) @ dBB, r.tensor(m) @ dBB, inst))
    rep.add(compare("CQT2 r(m x B)", r @ m.tensor(IB),
                    r.tensor(r) @ ctx.tensor(IB, s, IB) @ ctx.tensor(IB, IB, B.comult), inst))
    rep.add(compare("CQT2 r(B x m)", r @ IB.tensor(m),
                    r @ ctx.tensor(IB, r, IB) @ ctx.tensor(B.comult, IB, IB), inst))
    r_inv = convolution_inverse(ctx, r, BB)
    if r_inv is None or s_inv is None:
        reason = "r is not *-invertible" if r_inv is None else "sigma not invertible"
        rep.add(Report.boolean("CQT3 left", False, inst, {"reason": reason}))
        rep.add(Report.boolean("CQT3 right", False, inst, {"reason": reason}))
        return rep, None
    r_star = (r_inv @ s_inv).renamed("r*")
    rs = r_star @ s
    ee = BB.counit
    rep.add(compare("CQT3 left", rs.tensor(r) @ dBB, ee, inst))
    rep.add(compare("CQT3 right", r.tensor(rs) @ dBB, ee, inst))
    rep.add(compare("Remark r^-1 = r* sigma", r_inv, rs, inst))
    Q = CqtStructure(CB, r.renamed("r"), r_inv.renamed("r^-1"), r_star)
    if B.antipode is not None:
        Q = CqtStructure(CB, Q.r, Q.r_inv, r_star,
                         compute_u(ctx, Q), compute_u_star(ctx, Q))
    return rep, (Q if rep.passed else None)


def check_rsm(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    """(r* sigma x m sigma) Delta_{B*B} = (m x r* sigma) Delta_{B*B}."""
    CB = Q.base
    s = CB.innertwist
    m = CB.bialgebra.mult
    rs = Q.r_star @ s
    dBB = pair_coalgebra(ctx, CB).comult
    rep = Report()
    rep.add(compare("rsm", rs.tensor(m @ s) @ dBB, m.tensor(rs) @ dBB,
                    instance or Q.name))
    return rep


def check_r_sigma_commute(ctx: BraidedContext, Q: CqtStructure) -> bool:
    """(B x r) sigma_{B,B*B} == r x B (diagnostic only)."""
    CB = Q.base
    Bo = CB.carrier
    IB = ctx.id(Bo)
    return IB.tensor(Q.r) @ CB.sigma.component(Bo @ Bo) == Q.r.tensor(IB)


def check_lemma_rrs(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    """The four r / r* identities involving S, m and Delta."""
    CB = Q.base
    B = CB.bialgebra
    inst = instance or Q.name
    rep = Report()
    S = B.antipode
    if S is None:
        for a in ("Lemma rrs (i)", "Lemma rrs (ii)", "Lemma rrs (iii)", "Lemma rrs (iv)"):
            rep.add(Report.skipped(a, inst, "no antipode"))
        return rep
    Bo = B.carrier
    IB = ctx.id(Bo)
    r, rs = Q.r, Q.r_star
    tau = ctx.braiding(Bo, Bo)
    tau_inv = ctx.braiding_inverse(Bo, Bo)
    s_inv = CB.innertwist_inverse
    d = B.comult
    rep.add(compare("Lemma rrs (i)", r @ S.tensor(IB), rs @ tau_inv, inst))
    rep.add(compare("Lemma rrs (ii)", rs @ S.tensor(IB), r @ s_inv, inst))
    rep.add(compare("Lemma rrs (iii)", rs @ B.mult.tensor(IB),
                    rs.tensor(rs) @ ctx.tensor(IB, tau, IB) @ ctx.tensor(IB, IB, d), inst))
    rep.add(compare("Lemma rrs (iv)", rs @ IB.tensor(B.mult),
                    rs.tensor(rs) @ ctx.tensor(IB, s_inv, IB) @ ctx.tensor(tau_inv @ d, IB, IB),
                    inst))
    return rep


def check_unit_pairings(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    B = Q.base.bialgebra
    IB = ctx.id(B.carrier)
    eta, eps = B.unit, B.counit
    inst = instance or Q.name
    rep = Report()
    for nm, f in (("r", Q.r), ("r*", Q.r_star)):
        rep.add(compare(f"unit pairing {nm}(eta x B)", f @ eta.tensor(IB), eps, inst))
        rep.add(compare(f"unit pairing {nm}(B x eta)", f @ IB.tensor(eta), eps, inst))
    return rep


# --- u and u*


def _antipode(Q: CqtStructure) -> Morphism:
    S = Q.base.antipode
    if S is None:
        raise StructuralError(f"{Q.name} has no antipode")
    return S


def compute_u(ctx: BraidedContext, Q: CqtStructure) -> Morphism:
    """u = r sigma^{-1} (S x B) Delta."""
    B = Q.base.bialgebra
    S = _antipode(Q)
    out = Q.r @ Q.base.innertwist_inverse @ S.tensor(ctx.id(B.carrier)) @ B.comult
    return out.renamed("u")


def compute_u_star(ctx: BraidedContext, Q: CqtStructure) -> Morphism:
    """u* = r* (B x S) Delta."""
    B = Q.base.bialgebra
    S = _antipode(Q)
    return (Q.r_star @ ctx.id(B.carrier).tensor(S) @ B.comult).renamed("u*")


def u_alternatives(ctx: BraidedContext, Q: CqtStructure) -> dict:
    """The S^2 forms of u and u*: r*(S^2 x B)Delta and r sigma^{-1}(S^2 x B)Delta."""
    B = Q.base.bialgebra
    S = _antipode(Q)
    S2 = (S @ S).tensor(ctx.id(B.carrier))
    return {
        "u": Q.r_star @ S2 @ B.comult,
        "u*": Q.r @ Q.base.innertwist_inverse @ S2 @ B.comult,
    }


def check_u_definitions(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    """u, u* from the S-forms agree with the S^2-forms."""
    inst = instance or Q.name
    rep = Report()
    alt = u_alternatives(ctx, Q)
    rep.add(compare("defu = defu1 (u)", Q.u, alt["u"], inst))
    rep.add(compare("defu = defu1 (u*)", Q.u_star, alt["u*"], inst))
    return rep


def check_lemma_uu(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    """(u x B)Delta = (u x S^2) sigma^{-1} Delta and
    (u* x S^2)Delta = (B x u*) sigma tau^{-1} Delta."""
    CB = Q.base
    B = CB.bialgebra
    Bo = B.carrier
    IB = ctx.id(Bo)
    S = _antipode(Q)
    S2 = S @ S
    d = B.comult
    inst = instance or Q.name
    rep = Report()
    rep.add(compare("Lemma uu (i)", Q.u.tensor(IB) @ d,
                    Q.u.tensor(S2) @ CB.innertwist_inverse @ d, inst))
    rep.add(compare("Lemma uu (ii)", Q.u_star.tensor(S2) @ d,
                    IB.tensor(Q.u_star) @ CB.innertwist @ ctx.braiding_inverse(Bo, Bo) @ d,
                    inst))
    return rep


def check_u_inverse(ctx: BraidedContext, Q: CqtStructure, instance: str = "") -> Report:
    """u * u* = eps = u* * u in Mor(B, I)."""
    B = Q.base.bialgebra
    c = B.coalgebra
    inst = instance or Q.name
    rep = Report()
    rep.add(compare("Corollary u* inverse (right)", convolution(ctx, Q.u, Q.u_star, c), B.counit, inst))
    rep.add(compare("Corollary u* inverse (left)", convolution(ctx, Q.u_star, Q.u, c), B.counit, inst))
    return rep


def antipode_square_via_u(ctx: BraidedContext, Q: CqtStructure) -> Morphism:
    """(u x B x u*)(B x sigma tau^{-1}) Delta^(2)."""
    CB = Q.base
    Bo = CB.carrier
    IB = ctx.id(Bo)
    st = CB.innertwist @ ctx.braiding_inverse(Bo, Bo)
    out = ctx.tensor(Q.u, IB, Q.u_star) @ IB.tensor(st) @ comult2(CB.bialgebra)
    return out.renamed("Theorem S^2")


def antipode_inverse_via_u(ctx: BraidedContext, Q: CqtStructure) -> Morphism:
    """S (u* x u x B)(B x tau^{-1}) Delta^(2)."""
    CB = Q.base
    Bo = CB.carrier
    IB = ctx.id(Bo)
    S = _antipode(Q)
    out = (S @ ctx.tensor(Q.u_star, Q.u, IB) @ IB.tensor(ctx.braiding_inverse(Bo, Bo))
           @ comult2(CB.bialgebra))
    return out.renamed("S^-1 via u")


def check_antipode_formulas(ctx: BraidedContext, Q: CqtStructure,
                            instance: str = "") -> Report:
    """S^2 and S^{-1} from u, u* against the matrices of S."""
    inst = instance or Q.name
    S = _antipode(Q)
    IB = ctx.id(Q.base.carrier)
    rep = Report()
    S2 = antipode_square_via_u(ctx, Q)
    rep.add(compare("Theorem S^2", S2, S @ S, inst))
    rep.add(Report.boolean("Theorem S^2 invertible", S2.inverse() is not None, inst,
                           {"reason": "singular"}))
    Si = antipode_inverse_via_u(ctx, Q)
    rep.add(compare("Theorem S^-1 (left)", Si @ S, IB, inst))
    rep.add(compare("Theorem S^-1 (right)", S @ Si, IB, inst))
    solved = S.inverse()
    if solved is None:
        rep.add(Report.boolean("Theorem S^-1 = inverse matrix", False, inst,
                               {"reason": "S singular"}))
    else:
        rep.add(compare("Theorem S^-1 = inverse matrix", Si, solved, inst))
    return rep


# --- Yang-Baxter operator


def yang_baxter_operator(ctx: BraidedContext, Q: CqtStructure) -> Morphism:
    """R = (r^{-1} x sigma x r) Delta^(2)_{B*B}: B*B -> B*B."""
    BB = pair_coalgebra(ctx, Q.base)
    R = ctx.tensor(Q.r_inv, Q.base.innertwist, Q.r) @ comult2(BB)
    return R.renamed("R")


def check_yang_baxter(ctx: BraidedContext, Q: CqtStructure, R: Morphism | None = None,
                      instance: str = "") -> Report:
    """Braid relation, invertibility and coalgebra-morphism property of R."""
    R = R if R is not None else yang_baxter_operator(ctx, Q)
    inst = instance or Q.name
    IB = ctx.id(Q.base.carrier)
    BB = pair_coalgebra(ctx, Q.base)
    rep = Report()
    R1, R2 = R.tensor(IB), IB.tensor(R)
    rep.add(compare("YBE", R1 @ R2 @ R1, R2 @ R1 @ R2, inst))
    rep.add(Report.boolean("R invertible", R.inverse() is not None, inst,
                           {"reason": "singular"}))
    rep.add(compare("R coalgebra morphism", BB.comult @ R, R.tensor(R) @ BB.comult, inst))
    rep.add(compare("R counit", BB.counit @ R, BB.counit, inst))
    return rep
