"""Programmatic example instances.

Structure constants are generated from closed forms (group laws, the
Sweedler relations, the exterior line) so they are consistent by
construction.  Every builder returns an :class:`Example` bundling the
context, the central bialgebra and, where one exists, a CQT structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catcore import UNIT, Bicharacter, BraidedContext, GradingGroup, StructuralError
from .central import CentralBialgebra, HalfBraiding, tensor_central_bialgebra
from .cqt import CqtStructure, check_cqt
from .hopf import Bialgebra, solve_antipode

__all__ = [
    "ExampleSpec",
    "Example",
    "group_algebra",
    "sweedler_algebra",
    "sweedler_antipode_closed_form",
    "exterior_line",
    "exterior_r",
    "super_context",
    "build_group_algebra_cqt",
    "build_sweedler",
    "build_exterior_line",
    "build_group_algebra_square",
    "build_exterior_square",
    "build",
    "EXAMPLES",
]


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    parameters: dict = field(default_factory=dict)


@dataclass(eq=False)
class Example:
    name: str
    ctx: BraidedContext
    central: CentralBialgebra
    cqt: CqtStructure | None = None
    closed_form_antipode: object = None
    notes: dict = field(default_factory=dict)

    @property
    def bialgebra(self) -> Bialgebra:
        return self.central.bialgebra


def _require_cqt(ctx, CB, r):
    rep, Q = check_cqt(ctx, CB, r)
    if Q is None:
        fails = "; ".join(rec.line() for rec in rep.failures)
        raise StructuralError(f"{CB.name}: r is not a CQT structure: {fails}")
    return Q


# --- group algebras


def group_algebra(ctx: BraidedContext, n: int, name: str | None = None) -> Bialgebra:
    """k[Z/n] on the grouplike basis g^0..g^{n-1}, trivially graded."""
    name = name or f"kZ{n}"
    B = ctx.space(name, [f"g{i}" for i in range(n)])
    m = ctx.sparse(B @ B, B, {((i + j) % n, i * n + j): 1
                              for i in range(n) for j in range(n)}, "m")
    u = ctx.sparse(UNIT, B, {(0, 0): 1}, "eta")
    d = ctx.sparse(B, B @ B, {(i * n + i, i): 1 for i in range(n)}, "Delta")
    e = ctx.functional(B, [1] * n, "eps")
    S = ctx.sparse(B, B, {((-i) % n, i): 1 for i in range(n)}, "S")
    return Bialgebra(B, m, u, d, e, S, name)


def build_group_algebra_cqt(n: int, k: int) -> Example:
    """k[Z/n] with sigma = flip and r(g^i x g^j) = zeta_n^{k ij}."""
    if n < 1 or not 0 <= k < n:
        raise ValueError("need n >= 1 and 0 <= k < n")
    ctx = BraidedContext(n)
    H = group_algebra(ctx, n)
    CB = CentralBialgebra(H, HalfBraiding.braiding(ctx, H.carrier))
    z = ctx.field.zeta
    r = ctx.functional(H.carrier @ H.carrier,
                       [z(k * i * j) for i in range(n) for j in range(n)], "r")
    Q = _require_cqt(ctx, CB, r)
    return Example(f"kz{n}", ctx, CB, Q, H.antipode, {"n": n, "k": k})


# --- Sweedler's four-dimensional Hopf algebra


def _sw(a, b):
    """Index of g^a x^b in the basis (1, g, x, gx)."""
    return a + 2 * b


def sweedler_algebra(ctx: BraidedContext, with_antipode: bool = True) -> Bialgebra:
    """H4: g^2 = 1, x^2 = 0, xg = -gx, Delta g = g x g, Delta x = x x 1 + g x x."""
    H = ctx.space("H4", ["1", "g", "x", "gx"])
    ent = {}
    for a1 in range(2):
        for b1 in range(2):
            for a2 in range(2):
                for b2 in range(2):
                    if b1 + b2 > 1:
                        continue
                    # g^a1 x^b1 g^a2 x^b2 = (-1)^{b1 a2} g^{a1+a2} x^{b1+b2}
                    ent[(_sw((a1 + a2) % 2, b1 + b2), _sw(a1, b1) * 4 + _sw(a2, b2))] = \
                        (-1) ** (b1 * a2)
    m = ctx.sparse(H @ H, H, ent, "m")
    u = ctx.sparse(UNIT, H, {(0, 0): 1}, "eta")
    dent = {
        (_sw(0, 0) * 4 + _sw(0, 0), 0): 1,
        (_sw(1, 0) * 4 + _sw(1, 0), 1): 1,
        (_sw(0, 1) * 4 + _sw(0, 0), 2): 1,   # x -> x*1
        (_sw(1, 0) * 4 + _sw(0, 1), 2): 1,   #    + g*x
        (_sw(1, 1) * 4 + _sw(1, 0), 3): 1,   # gx -> gx*g
        (_sw(0, 0) * 4 + _sw(1, 1), 3): 1,   #    + 1*gx
    }
    d = ctx.sparse(H, H @ H, dent, "Delta")
    e = ctx.functional(H, [1, 1, 0, 0], "eps")
    B = Bialgebra(H, m, u, d, e, None, "H4")
    if with_antipode:
        S = solve_antipode(ctx, B)
        B = B.with_antipode(S)
    return B


def sweedler_antipode_closed_form(ctx: BraidedContext, H) -> object:
    """S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x."""
    return ctx.sparse(H, H, {(0, 0): 1, (1, 1): 1, (3, 2): -1, (2, 3): 1}, "S closed form")


def build_sweedler(lam=1) -> Example:
    """H4 with sigma = flip and a CQT structure found by the ansatz solver.

    The solver returns the family r_lam; ``lam`` picks the member.
    """
    from .oracle import cqt_ansatz_solver

    ctx = BraidedContext(1)
    H = sweedler_algebra(ctx)
    CB = CentralBialgebra(H, HalfBraiding.braiding(ctx, H.carrier))
    cands = cqt_ansatz_solver(ctx, CB, samples=(lam,))
    nontrivial = [c for c in cands if c.r.entry(0, _sw(1, 0) * 4 + _sw(1, 0)) != 1]
    if not nontrivial:
        raise StructuralError("no nontrivial CQT structure found on H4")
    # prefer the member whose x*x pairing is the requested parameter
    chosen = nontrivial[0]
    for c in nontrivial:
        if c.r.entry(0, _sw(0, 1) * 4 + _sw(0, 1)) == ctx.field(lam):
            chosen = c
            break
    Q = _require_cqt(ctx, CB, chosen.r)
    return Example("sweedler", ctx, CB, Q, sweedler_antipode_closed_form(ctx, H.carrier),
                   {"lambda": lam, "family": chosen.describe()})


# --- the exterior line in super vector spaces


def super_context() -> BraidedContext:
    group = GradingGroup((2,))
    ctx = BraidedContext(2, group)
    ctx.chi = Bicharacter.from_exponents(group, ctx.field, [[1]])
    return ctx


def exterior_line(ctx: BraidedContext, name: str = "L", var: str = "v") -> Bialgebra:
    """Lambda(v) with v odd and primitive: v^2 = 0, Delta v = v x 1 + 1 x v."""
    L = ctx.space(name, [("1", (0,)), (var, (1,))])
    m = ctx.sparse(L @ L, L, {(0, 0): 1, (1, 1): 1, (1, 2): 1}, "m")
    u = ctx.sparse(UNIT, L, {(0, 0): 1}, "eta")
    d = ctx.sparse(L, L @ L, {(0, 0): 1, (2, 1): 1, (1, 1): 1}, "Delta")
    e = ctx.functional(L, [1, 0], "eps")
    S = ctx.sparse(L, L, {(0, 0): 1, (1, 1): -1}, "S")
    return Bialgebra(L, m, u, d, e, S, f"Lambda({var})")


def exterior_r(ctx: BraidedContext, L, alpha):
    return ctx.functional(L @ L, [1, 0, 0, alpha], "r")


def build_exterior_line(alpha=0) -> Example:
    """Lambda(v) in super vector spaces, sigma = tau, r(1,1) = 1, r(v,v) = alpha."""
    ctx = super_context()
    H = exterior_line(ctx)
    CB = CentralBialgebra(H, HalfBraiding.braiding(ctx, H.carrier))
    Q = _require_cqt(ctx, CB, exterior_r(ctx, H.carrier, ctx.field(alpha)))
    return Example("exterior", ctx, CB, Q, H.antipode, {"alpha": alpha})


# --- tensor products


def build_group_algebra_square(n: int = 2) -> Example:
    """k[Z/n] x k[Z/n] as a central bialgebra (no CQT attached)."""
    ctx = BraidedContext(n)
    B = group_algebra(ctx, n, f"kZ{n}a")
    C = group_algebra(ctx, n, f"kZ{n}b")
    CB = CentralBialgebra(B, HalfBraiding.braiding(ctx, B.carrier))
    CC = CentralBialgebra(C, HalfBraiding.braiding(ctx, C.carrier))
    T = tensor_central_bialgebra(ctx, CB, CC)
    return Example(f"kz{n}^2", ctx, T, None, None, {"factors": (CB, CC)})


def build_exterior_square() -> Example:
    """Lambda(v) x Lambda(w) in super vector spaces."""
    ctx = super_context()
    B = exterior_line(ctx, "Lv", "v")
    C = exterior_line(ctx, "Lw", "w")
    CB = CentralBialgebra(B, HalfBraiding.braiding(ctx, B.carrier))
    CC = CentralBialgebra(C, HalfBraiding.braiding(ctx, C.carrier))
    T = tensor_central_bialgebra(ctx, CB, CC)
    return Example("exterior^2", ctx, T, None, None, {"factors": (CB, CC)})


EXAMPLES = {
    "kz": lambda n=3, k=1: build_group_algebra_cqt(int(n), int(k)),
    "sweedler": lambda lam=1: build_sweedler(lam),
    "exterior": lambda alpha=0: build_exterior_line(alpha),
    "kz-square": lambda n=2: build_group_algebra_square(int(n)),
    "exterior-square": lambda: build_exterior_square(),
}


def build(spec: ExampleSpec) -> Example:
    try:
        maker = EXAMPLES[spec.name]
    except KeyError:
        raise ValueError(f"unknown example {spec.name!r}; choose from {sorted(EXAMPLES)}") from None
    return maker(**spec.parameters)
