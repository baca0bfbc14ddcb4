"""Half-braidings and central bialgebras.

A half-braiding on an object B is a family sigma_B(N): B*N -> N*B.  Only
generator components are stored; components on tensor words are obtained
from the hexagon rule

    sigma_B(M*N) = (M x sigma_B(N)) (sigma_B(M) x N),

and a half-braiding on a tensor product owner A*B is

    sigma_{A*B}(N) = (sigma_A(N) x B) (A x sigma_B(N)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .catcore import UNIT, BraidedContext, GradedObject, Morphism, StructuralError
from .hopf import Bialgebra, Coalgebra, check_antipode, tensor_coalgebra
from .report import Report, compare

__all__ = [
    "MissingComponentError",
    "HalfBraiding",
    "CentralBialgebra",
    "check_half_braiding",
    "check_center_coalgebra",
    "check_central_axioms",
    "check_derived_sigma_identities",
    "check_schauenburg",
    "opposite_product",
    "opposite_product_alt",
    "opposite_antipode",
    "opposite_antipode_alt",
    "check_opposite_antipodes",
    "tensor_central_bialgebra",
    "check_commutative",
]


class MissingComponentError(StructuralError):
    """No half-braiding component is available for the requested object."""


class HalfBraiding:
    """sigma_B(-) on registered generator objects, hexagon-extended."""

    def __init__(self, ctx: BraidedContext, owner: GradedObject, components=None,
                 tautological: bool = False, parts=None, rule=None):
        self.ctx = ctx
        self.owner = owner
        self.tautological = tautological
        self.parts = tuple(parts) if parts else None
        self.rule = rule
        self.components = {}
        for N, s in (components or {}).items():
            if (s.source, s.target) != (owner @ N, N @ owner):
                raise StructuralError(
                    f"sigma component for {N.name} must be {owner.name}*{N.name} -> "
                    f"{N.name}*{owner.name}")
            self.components[N] = s
        self._cache = {}
        self._inv_cache = {}

    @classmethod
    def braiding(cls, ctx: BraidedContext, owner: GradedObject) -> HalfBraiding:
        """The tautological choice sigma_B(N) = tau_{B,N}."""
        return cls(ctx, owner, tautological=True)

    @classmethod
    def product(cls, first: HalfBraiding, second: HalfBraiding) -> HalfBraiding:
        return cls(first.ctx, first.owner @ second.owner, parts=(first, second))

    def with_component(self, N: GradedObject, s: Morphism) -> HalfBraiding:
        comps = dict(self.components)
        comps[N] = s
        return HalfBraiding(self.ctx, self.owner, comps, self.tautological, self.parts,
                            self.rule)

    def registered(self):
        return list(self.components)

    def has_component(self, N: GradedObject) -> bool:
        try:
            self.component(N)
        except MissingComponentError:
            return False
        return True

    def component(self, N: GradedObject) -> Morphism:
        if N in self._cache:
            return self._cache[N]
        ctx = self.ctx
        if N.is_unit:
            out = ctx.id(self.owner)
        elif self.parts:
            first, second = self.parts
            out = (first.component(N).tensor(ctx.id(second.owner))
                   @ ctx.id(first.owner).tensor(second.component(N)))
        elif N in self.components:
            out = self.components[N]
        elif self.rule is not None:
            out = self.rule(N)
        elif self.tautological:
            out = ctx.braiding(self.owner, N)
        else:
            out = self._split(N)
        self._cache[N] = out
        return out

    def _split(self, N: GradedObject) -> Morphism:
        ctx = self.ctx
        k = len(N.factors)
        for cut in range(k - 1, 0, -1):
            M = GradedObject(N.factors[:cut])
            if M not in self.components:
                continue
            rest = GradedObject(N.factors[cut:])
            try:
                s_rest = self.component(rest)
            except MissingComponentError:
                continue
            return (ctx.id(M).tensor(s_rest)) @ (self.components[M].tensor(ctx.id(rest)))
        raise MissingComponentError(
            f"no half-braiding component of {self.owner.name} past {N.name}")

    def inverse(self, N: GradedObject) -> Morphism | None:
        """sigma_B(N)^{-1}: N*B -> B*N, by exact inversion (None if singular)."""
        if N in self._inv_cache:
            return self._inv_cache[N]
        if N.is_unit:
            out = self.ctx.id(self.owner)
        elif self.tautological and not self.parts and N not in self.components:
            out = self.ctx.braiding_inverse(self.owner, N)
        else:
            out = self.component(N).inverse()
        self._inv_cache[N] = out
        return out

    def __repr__(self):
        kind = ("braiding" if self.tautological else "product" if self.parts
                else "rule" if self.rule else "registered")
        return f"HalfBraiding({self.owner.name}, {kind})"


@dataclass(frozen=True, eq=False)
class CentralBialgebra:
    bialgebra: Bialgebra
    sigma: HalfBraiding

    def __post_init__(self):
        if self.sigma.owner != self.bialgebra.carrier:
            raise StructuralError("half-braiding owner differs from the bialgebra carrier")

    @property
    def name(self):
        return self.bialgebra.name

    @property
    def carrier(self):
        return self.bialgebra.carrier

    @property
    def innertwist(self) -> Morphism:
        return self.sigma.component(self.carrier)

    @property
    def innertwist_inverse(self) -> Morphism | None:
        return self.sigma.inverse(self.carrier)

    @property
    def antipode(self):
        return self.bialgebra.antipode

    def with_bialgebra(self, B: Bialgebra) -> CentralBialgebra:
        return CentralBialgebra(B, self.sigma)


def _sigma_pair(CB: CentralBialgebra, N: GradedObject) -> Morphism:
    """sigma_{B*B,N} = (sigma_{B,N} x B)(B x sigma_{B,N})."""
    ctx = CB.sigma.ctx
    s = CB.sigma.component(N)
    IB = ctx.id(CB.carrier)
    return s.tensor(IB) @ IB.tensor(s)


def check_half_braiding(hb: HalfBraiding, instance: str = "") -> Report:
    """Unit normalisation and hexagon rule for user-supplied composite components."""
    ctx = hb.ctx
    inst = instance or hb.owner.name
    rep = Report()
    rep.add(compare("sigma(I) = id", hb.component(UNIT), ctx.id(hb.owner), inst))
    for N, s in hb.components.items():
        if len(N.factors) < 2:
            continue
        stripped = HalfBraiding(ctx, hb.owner,
                                {M: c for M, c in hb.components.items() if M != N})
        try:
            derived = stripped.component(N)
        except MissingComponentError:
            continue
        rep.add(compare("sigma hexagon", s, derived, f"{inst} past {N.name}"))
    return rep


def check_center_coalgebra(ctx: BraidedContext, Bc: Coalgebra, sigma: HalfBraiding,
                           tests=None, morphisms=(), instance: str = "") -> Report:
    """Z1-Z3 for a coalgebra with a half-braiding (no product axioms).

    ``tests`` are Coalgebra or Bialgebra values (default: Bc itself);
    ``morphisms`` are triples (f, C, D) of coalgebra morphisms f: C -> D.
    Naturality (Z2) is always checked against Delta_C, eps_C and, for
    bialgebras, eta_C.
    """
    inst0 = instance or Bc.name or Bc.carrier.name
    tests = list(tests) if tests is not None else [Bc]
    IB = ctx.id(Bc.carrier)
    rep = Report()
    for T in tests:
        C = T.coalgebra if isinstance(T, Bialgebra) else T
        inst = f"{inst0}; C={C.name or C.carrier.name}"
        N = C.carrier
        s = sigma.component(N)
        # Z1: sigma_{B,C} is a coalgebra morphism B*C -> C*B
        d_cb = tensor_coalgebra(ctx, C, Bc).comult
        d_bc = tensor_coalgebra(ctx, Bc, C).comult
        rep.add(compare("Z1", d_cb @ s, s.tensor(s) @ d_bc, inst))
        rep.add(compare("Z1 counit", C.counit.tensor(Bc.counit) @ s,
                        Bc.counit.tensor(C.counit), inst))
        # Z2 on the automatic morphisms
        s_cc = sigma.component(N @ N)
        rep.add(compare("Z2 (Delta_C)", s_cc @ IB.tensor(C.comult),
                        C.comult.tensor(IB) @ s, inst))
        rep.add(compare("Z2 (eps_C)", IB.tensor(C.counit),
                        C.counit.tensor(IB) @ s, inst))
        if isinstance(T, Bialgebra):
            rep.add(compare("Z2 (eta_C)", s @ IB.tensor(T.unit), T.unit.tensor(IB), inst))
        # Z3
        s_inv = sigma.inverse(N)
        if s_inv is None:
            rep.add(Report.boolean("Z3", False, inst, {"reason": "sigma not invertible"}))
        else:
            ok = s @ s_inv == ctx.id(N @ Bc.carrier) and s_inv @ s == ctx.id(Bc.carrier @ N)
            rep.add(Report.boolean("Z3", ok, inst, {"reason": "inverse check failed"}))
    for f, C, D in morphisms:
        inst = f"{inst0}; f={f.name or '?'}"
        lhs = sigma.component(D.carrier) @ IB.tensor(f)
        rhs = f.tensor(IB) @ sigma.component(C.carrier)
        rep.add(compare("Z2", lhs, rhs, inst))
    return rep


def check_central_axioms(ctx: BraidedContext, CB: CentralBialgebra, tests=None,
                         morphisms=(), instance: str = "") -> Report:
    """Z1-Z5 against each test coalgebra (default: B itself)."""
    B = CB.bialgebra
    inst0 = instance or CB.name
    tests = list(tests) if tests is not None else [B]
    rep = check_center_coalgebra(ctx, B.coalgebra, CB.sigma, tests, morphisms, inst0)
    for T in tests:
        C = T.coalgebra if isinstance(T, Bialgebra) else T
        inst = f"{inst0}; C={C.name or C.carrier.name}"
        N = C.carrier
        IC = ctx.id(N)
        s = CB.sigma.component(N)
        rep.add(compare("Z4", s @ B.unit.tensor(IC), IC.tensor(B.unit), inst))
        rep.add(compare("Z5", s @ B.mult.tensor(IC),
                        IC.tensor(B.mult) @ _sigma_pair(CB, N), inst))
    return rep


def check_derived_sigma_identities(ctx: BraidedContext, CB: CentralBialgebra, C=None,
                                   instance: str = "", wrong_braiding: bool = False) -> Report:
    """The consequences of Z1 obtained by applying counits, and S-naturality.

    ``wrong_braiding`` replaces tau^{-1}_{C,B} by tau_{B,C} in the second
    form of eq. 7 (a deliberately wrong variant for negative tests).
    """
    B = CB.bialgebra
    C = C if C is not None else B
    Cc = C.coalgebra if isinstance(C, Bialgebra) else C
    inst = f"{instance or CB.name}; C={Cc.name or Cc.carrier.name}"
    Bo, Co = B.carrier, Cc.carrier
    IB, IC = ctx.id(Bo), ctx.id(Co)
    dB = B.comult
    s = CB.sigma.component(Co)
    s_inv = CB.sigma.inverse(Co)
    rep = Report()
    lhs7 = IC.tensor(dB) @ s
    rep.add(compare("eq7 (tau form)", lhs7,
                    s.tensor(IB) @ IB.tensor(ctx.braiding(Bo, Co)) @ dB.tensor(IC), inst))
    cross = ctx.braiding(Bo, Co) if wrong_braiding else ctx.braiding_inverse(Co, Bo)
    rep.add(compare("eq7 (tau^-1 form)", lhs7,
                    cross.tensor(IB) @ IB.tensor(s) @ dB.tensor(IC), inst))
    if s_inv is None:
        rep.add(Report.boolean("eq8 (tau form)", False, inst, {"reason": "sigma not invertible"}))
        rep.add(Report.boolean("eq8 (tau^-1 form)", False, inst, {"reason": "sigma not invertible"}))
    else:
        lhs8 = dB.tensor(IC) @ s_inv
        rep.add(compare("eq8 (tau form)", lhs8,
                        IB.tensor(s_inv) @ ctx.braiding(Co, Bo).tensor(IB) @ IC.tensor(dB), inst))
        rep.add(compare("eq8 (tau^-1 form)", lhs8,
                        IB.tensor(ctx.braiding_inverse(Bo, Co)) @ s_inv.tensor(IB)
                        @ IC.tensor(dB), inst))
    SC = C.antipode if isinstance(C, Bialgebra) else None
    if SC is not None:
        rep.add(compare("sigma commutes with S_C", s @ IB.tensor(SC), SC.tensor(IB) @ s, inst))
    return rep


def check_schauenburg(ctx: BraidedContext, CB: CentralBialgebra, C=None,
                      instance: str = "") -> Report:
    """sigma_{B,C}(S x C) = (C x S) tau_{B,C} sigma^{-1}_{B,C} tau^{-1}_{C,B}."""
    B = CB.bialgebra
    C = C if C is not None else B
    Cc = C.coalgebra if isinstance(C, Bialgebra) else C
    inst = f"{instance or CB.name}; C={Cc.name or Cc.carrier.name}"
    rep = Report()
    S = B.antipode
    s_inv = CB.sigma.inverse(Cc.carrier)
    if S is None or s_inv is None:
        rep.add(Report.skipped("Schauenburg", inst, "needs antipode and invertible sigma"))
        return rep
    Bo, Co = B.carrier, Cc.carrier
    IC = ctx.id(Co)
    lhs = CB.sigma.component(Co) @ S.tensor(IC)
    rhs = (IC.tensor(S) @ ctx.braiding(Bo, Co) @ s_inv @ ctx.braiding_inverse(Co, Bo))
    rep.add(compare("Schauenburg", lhs, rhs, inst))
    return rep


# --- opposite products and antipodes


def opposite_product(ctx: BraidedContext, CB: CentralBialgebra) -> CentralBialgebra:
    """B^op with m^op = m sigma_{B,B}."""
    B = CB.bialgebra
    m_op = (B.mult @ CB.innertwist).renamed("m_op")
    return CentralBialgebra(Bialgebra(B.carrier, m_op, B.unit, B.comult, B.counit,
                                      None, B.name + "^op"), CB.sigma)


def opposite_product_alt(ctx: BraidedContext, CB: CentralBialgebra) -> CentralBialgebra:
    """B^op' with m^op' = m sigma^{-1}_{B,B}."""
    B = CB.bialgebra
    s_inv = CB.innertwist_inverse
    if s_inv is None:
        raise StructuralError("innertwist is not invertible")
    m_op = (B.mult @ s_inv).renamed("m_op'")
    return CentralBialgebra(Bialgebra(B.carrier, m_op, B.unit, B.comult, B.counit,
                                      None, B.name + "^op'"), CB.sigma)


def _antipode_inverse(CB: CentralBialgebra):
    S = CB.antipode
    if S is None:
        raise StructuralError(f"{CB.name} has no antipode")
    return S.inverse()


def opposite_antipode(ctx: BraidedContext, CB: CentralBialgebra) -> Morphism | None:
    """(eps x S^{-1}) sigma^{-1} tau^{-1} Delta, or None when S is not invertible."""
    B = CB.bialgebra
    S_inv = _antipode_inverse(CB)
    s_inv = CB.innertwist_inverse
    if S_inv is None or s_inv is None:
        return None
    Bo = B.carrier
    out = (B.counit.tensor(S_inv) @ s_inv @ ctx.braiding_inverse(Bo, Bo) @ B.comult)
    return out.renamed("S_bar")


def opposite_antipode_alt(ctx: BraidedContext, CB: CentralBialgebra) -> Morphism | None:
    """(S^{-1} x eps) sigma tau^{-1} Delta."""
    B = CB.bialgebra
    S_inv = _antipode_inverse(CB)
    if S_inv is None:
        return None
    Bo = B.carrier
    out = (S_inv.tensor(B.counit) @ CB.innertwist @ ctx.braiding_inverse(Bo, Bo) @ B.comult)
    return out.renamed("S_bar'")


def check_opposite_antipodes(ctx: BraidedContext, CB: CentralBialgebra,
                             instance: str = "") -> Report:
    """Antipode axioms for (B^op, S_bar) and (B^op', S_bar')."""
    inst = instance or CB.name
    rep = Report()
    if CB.antipode is None:
        rep.add(Report.skipped("opposite antipode", inst, "no antipode"))
        return rep
    S_inv = CB.antipode.inverse()
    if S_inv is None:
        rep.add(Report.boolean("opposite antipode", False, inst,
                               {"reason": "precondition: S not invertible"}))
        return rep
    B = CB.bialgebra
    Sb = opposite_antipode(ctx, CB)
    op = opposite_product(ctx, CB).bialgebra
    rep.extend(check_antipode(ctx, op, Sb, instance=inst, anchor="Theorem S_bar on B^op"))
    Sb2 = opposite_antipode_alt(ctx, CB)
    op2 = opposite_product_alt(ctx, CB).bialgebra
    rep.extend(check_antipode(ctx, op2, Sb2, instance=inst, anchor="Theorem S_bar' on B^op'"))
    return rep


# --- tensor products and commutativity


def tensor_central_bialgebra(ctx: BraidedContext, CB: CentralBialgebra,
                             CC: CentralBialgebra) -> CentralBialgebra:
    """B*C with Delta via tau, product via the half-braiding of C past B.

    m = (m_B x m_C)(B x sigma_C(B) x C); antipode, when both are Hopf,
    sigma_C(B)(S_C x S_B) tau^{-1}_{C,B}.
    """
    B, C = CB.bialgebra, CC.bialgebra
    Bo, Co = B.carrier, C.carrier
    IB, IC = ctx.id(Bo), ctx.id(Co)
    try:
        cross = CC.sigma.component(Bo)
    except MissingComponentError as exc:
        raise MissingComponentError(
            f"tensor product needs sigma_{C.name}({B.name}): {exc}") from None
    coal = tensor_coalgebra(ctx, B.coalgebra, C.coalgebra)
    m = B.mult.tensor(C.mult) @ ctx.tensor(IB, cross, IC)
    u = B.unit.tensor(C.unit)
    S = None
    if B.antipode is not None and C.antipode is not None:
        S = cross @ C.antipode.tensor(B.antipode) @ ctx.braiding_inverse(Co, Bo)
        S = S.renamed("S")
    BC = Bialgebra(Bo @ Co, m.renamed("m"), u.renamed("eta"), coal.comult.renamed("Delta"),
                   coal.counit.renamed("eps"), S, f"{B.name}*{C.name}")
    return CentralBialgebra(BC, HalfBraiding.product(CB.sigma, CC.sigma))


def check_commutative(ctx: BraidedContext, CB: CentralBialgebra) -> bool:
    """m sigma == m."""
    B = CB.bialgebra
    return B.mult @ CB.innertwist == B.mult
