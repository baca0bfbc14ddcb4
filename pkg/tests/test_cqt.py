from fractions import Fraction

import pytest

from innertwist.catcore import UNIT, BraidedContext
from innertwist.central import CentralBialgebra, HalfBraiding
from innertwist.cqt import (antipode_inverse_via_u, antipode_square_via_u, check_antipode_formulas,
                            check_cqt, check_lemma_rrs, check_lemma_uu, check_rsm,
                            check_u_definitions, check_u_inverse, check_unit_pairings,
                            check_yang_baxter, yang_baxter_operator)
from innertwist.examples import build_exterior_line, build_group_algebra_cqt, group_algebra

CQT_FIXTURES = ["kz3", "sweedler", "exterior"]


@pytest.fixture(params=CQT_FIXTURES)
def example(request):
    return request.getfixturevalue(request.param)


def _kz(n, values):
    ctx = BraidedContext(n)
    H = group_algebra(ctx, n)
    CB = CentralBialgebra(H, HalfBraiding.braiding(ctx, H.carrier))
    r = ctx.functional(H.carrier @ H.carrier,
                       [values(ctx.field.zeta, i, j) for i in range(n) for j in range(n)])
    return ctx, CB, r


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_bicharacter_is_cqt(n):
    ctx, CB, r = _kz(n, lambda z, i, j: z(i * j))
    rep, Q = check_cqt(ctx, CB, r)
    assert rep.passed and Q is not None, rep.to_text()
    assert len(rep) == 7


@pytest.mark.parametrize("n", [3, 4])
def test_non_bicharacter_fails_cqt2(n):
    ctx, CB, r = _kz(n, lambda z, i, j: z(i + j))
    rep, Q = check_cqt(ctx, CB, r)
    assert Q is None
    assert "fail" in rep.statuses("CQT2 r(m x B)") + rep.statuses("CQT2 r(B x m)")


def test_non_invertible_r_fails_cqt3():
    ctx, CB, r = _kz(2, lambda z, i, j: 0)
    rep, Q = check_cqt(ctx, CB, r)
    assert Q is None
    assert rep.statuses("CQT3 left") == ["fail"]


def test_grade_mixing_r_is_flagged(exterior):
    ctx = exterior.ctx
    L = exterior.central.carrier
    r = ctx.functional(L @ L, [1, 1, 0, 0], check=False)
    rep, _ = check_cqt(ctx, exterior.central, r)
    assert rep.statuses("r grade preserving") == ["fail"]


def test_cqt_consequences(example):
    ctx, Q = example.ctx, example.cqt
    for check in (check_rsm, check_lemma_rrs, check_unit_pairings, check_u_definitions,
                  check_lemma_uu, check_u_inverse, check_antipode_formulas, check_yang_baxter):
        rep = check(ctx, Q)
        assert rep.passed, rep.to_text()


def test_r_star_sigma_is_the_inverse(example):
    Q = example.cqt
    assert Q.r_inv == Q.r_star @ example.central.innertwist


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rrs_on_grouplikes(n):
    ex = build_group_algebra_cqt(n, 1)
    ctx, Q = ex.ctx, ex.cqt
    S = ex.central.antipode
    lhs = Q.r @ S.tensor(ctx.id(ex.central.carrier))
    z = ctx.field.zeta
    assert lhs == ctx.functional(lhs.source, [z(-i * j) for i in range(n) for j in range(n)])


def test_corrupted_unit_pairing_fails(kz3):
    ctx, Q = kz3.ctx, kz3.cqt
    bad = Q.r.with_entry(0, 1, ctx.field.zeta())   # r(1 x g) = zeta
    rep, _ = check_cqt(ctx, kz3.central, bad)
    assert not rep.passed
    from dataclasses import replace
    rep = check_unit_pairings(ctx, replace(Q, r=bad))
    assert rep.statuses("unit pairing r(eta x B)") == ["fail"]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_u_on_grouplikes(n):
    ex = build_group_algebra_cqt(n, 1)
    z = ex.ctx.field.zeta
    assert ex.cqt.u == ex.ctx.functional(ex.central.carrier, [z(-i * i) for i in range(n)])
    assert ex.cqt.u_star == ex.ctx.functional(ex.central.carrier, [z(i * i) for i in range(n)])


def test_sweedler_square_of_antipode_is_not_identity(sweedler):
    ctx, Q = sweedler.ctx, sweedler.cqt
    S = sweedler.central.antipode
    S2 = antipode_square_via_u(ctx, Q)
    assert S2 == S @ S
    assert S2 != ctx.id(sweedler.central.carrier)
    assert [S2.entry(i, i) for i in range(4)] == [1, 1, -1, -1]


def test_inverse_antipode_formula(example):
    S = example.central.antipode
    assert antipode_inverse_via_u(example.ctx, example.cqt) == S.inverse()


def test_exterior_square_antipode(exterior):
    S = exterior.central.antipode
    assert antipode_square_via_u(exterior.ctx, exterior.cqt) == S @ S


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1), Fraction(-3), Fraction(5, 2)])
def test_exterior_family(alpha):
    ex = build_exterior_line(alpha)
    assert ex.cqt.r.entry(0, 3) == alpha


@pytest.mark.parametrize("n", [2, 3])
def test_yang_baxter_operator_on_grouplikes_is_the_flip(n):
    # r^{-1}(g^i, g^j) and r(g^i, g^j) cancel on grouplikes, leaving sigma
    ex = build_group_algebra_cqt(n, 1)
    ctx = ex.ctx
    R = yang_baxter_operator(ctx, ex.cqt)
    B = ex.central.carrier
    assert R == ex.central.innertwist
    assert R == ctx.sparse(B @ B, B @ B, {(j * n + i, i * n + j): 1
                                          for i in range(n) for j in range(n)})
    assert check_yang_baxter(ctx, ex.cqt).passed


def test_yang_baxter_operator_on_sweedler_is_not_sigma(sweedler):
    R = yang_baxter_operator(sweedler.ctx, sweedler.cqt)
    assert R != sweedler.central.innertwist
    assert R.inverse() is not None


def test_yang_baxter_brute_force(sweedler):
    ctx = sweedler.ctx
    R = yang_baxter_operator(ctx, sweedler.cqt)
    B = sweedler.central.carrier
    assert R.source == B @ B and R.shape == (16, 16)
    I = ctx.id(B)
    a = R.tensor(I).to_dense()
    b = I.tensor(R).to_dense()

    def mul(X, Y):
        return [[sum((X[i][k] * Y[k][j] for k in range(64)), 0) for j in range(64)]
                for i in range(64)]
    assert mul(mul(a, b), a) == mul(mul(b, a), b)


def test_functional_shape_is_enforced(kz3):
    from innertwist.catcore import StructuralError
    with pytest.raises(StructuralError):
        check_cqt(kz3.ctx, kz3.central, kz3.ctx.functional(kz3.central.carrier, [1, 1, 1]))
