import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innertwist.catcore import (UNIT, Bicharacter, BraidedContext, GradedObject,
                                GradingGroup, Morphism, StructuralError)
from innertwist.examples import super_context
from innertwist.scalars import CyclotomicField


def z3_context(exponent=1):
    G = GradingGroup((3,))
    F = CyclotomicField(3)
    return BraidedContext(F, G, Bicharacter.from_exponents(G, F, [[exponent]]))


@st.composite
def dense_morphism(draw, ctx, source, target):
    rows = [[draw(st.integers(-3, 3)) for _ in range(source.dim)] for _ in range(target.dim)]
    return ctx.morphism(source, target, rows, check=False)


def dense_kron(A, B):
    """Kronecker product of dense row lists (row-major flat indices)."""
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def dense_mul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), 0) for j in range(len(B[0]))]
            for i in range(len(A))]


# --- objects


def test_unit_is_strict():
    ctx = BraidedContext(1)
    V = ctx.space("V", ["a", "b"])
    assert V @ UNIT == V == UNIT @ V
    assert UNIT.dim == 1 and UNIT.name == "I"


def test_flat_and_multi_indices_round_trip():
    ctx = BraidedContext(1)
    V, W = ctx.space("V", ["a", "b"]), ctx.space("W", ["x", "y", "z"])
    X = V @ W @ V
    for k in range(X.dim):
        assert X.flat_index(X.multi_index(k)) == k
    assert X.label(X.flat_index((1, 2, 0))) == "b*z*a"


def test_grades_add_in_tensor_words():
    ctx = z3_context()
    V = ctx.space("V", [("a", (1,)), ("b", (2,))])
    assert ctx.grades(V @ V) == ((2,), (0,), (0,), (1,))


def test_grade_outside_group_is_rejected():
    with pytest.raises(StructuralError):
        z3_context().space("V", [("a", (3,))])


# --- morphisms


def test_grade_violation_is_named():
    ctx = z3_context()
    V = ctx.space("V", [("a", (0,)), ("b", (1,))])
    with pytest.raises(StructuralError, match=r"\(0,1\): a <- b"):
        ctx.morphism(V, V, [[1, 1], [0, 1]], "f")


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_tensor_interchange_law(data):
    ctx = BraidedContext(1)
    A, B, C = (ctx.space(n, [f"{n}{i}" for i in range(d)]) for n, d in (("A", 2), ("B", 1), ("C", 2)))
    f = data.draw(dense_morphism(ctx, B, C))
    f2 = data.draw(dense_morphism(ctx, A, B))
    g = data.draw(dense_morphism(ctx, A, C))
    g2 = data.draw(dense_morphism(ctx, C, A))
    assert (f @ f2).tensor(g @ g2) == f.tensor(g) @ f2.tensor(g2)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_tensor_and_composition_agree_with_dense_oracle(data):
    ctx = BraidedContext(1)
    A, B = ctx.space("A", ["p", "q"]), ctx.space("B", ["r", "s", "t"])
    f = data.draw(dense_morphism(ctx, A, B))
    g = data.draw(dense_morphism(ctx, B, A))
    assert f.tensor(g).to_dense() == dense_kron(f.to_dense(), g.to_dense())
    assert (g @ f).to_dense() == dense_mul(g.to_dense(), f.to_dense())


def test_inverse_of_singular_matrix_is_none():
    ctx = BraidedContext(1)
    V = ctx.space("V", ["a", "b"])
    assert ctx.morphism(V, V, [[1, 2], [2, 4]]).inverse() is None
    f = ctx.morphism(V, V, [[1, 2], [3, 4]])
    assert f @ f.inverse() == ctx.id(V)


def test_first_difference_reports_coordinates():
    ctx = BraidedContext(1)
    V = ctx.space("V", ["a", "b"])
    f = ctx.id(V)
    g = f.with_entry(1, 0, 5)
    assert f.first_difference(g) == (1, 0, ctx.field(0), ctx.field(5))
    assert f.first_difference(f) is None


# --- braiding


def test_braiding_coefficient_from_chi_table():
    ctx = z3_context()
    V = ctx.space("V", [("v", (1,))])
    W = ctx.space("W", [("w", (2,))])
    assert ctx.braiding(V, W).entry(0, 0) == ctx.field.zeta(2)


@pytest.mark.parametrize("make", [super_context, z3_context, lambda: BraidedContext(1)])
def test_hexagons_and_naturality(make):
    ctx = make()
    g1 = ctx.group.elements()[-1]
    A = ctx.space("A", [("a0", ctx.group.zero), ("a1", g1)])
    B = ctx.space("B", [("b", g1)])
    C = ctx.space("C", [("c0", ctx.group.zero), ("c1", g1)])
    f = ctx.morphism(A, A, [[2, 0], [0, 3]], "f")
    g = ctx.morphism(C, C, [[1, 0], [0, -1]], "g")
    rep = ctx.check_hexagons(A, B, C, [(f, g)])
    assert rep.passed, rep.to_text()


def test_non_bilinear_chi_breaks_a_hexagon():
    G = GradingGroup((3,))
    F = CyclotomicField(3)
    chi = Bicharacter.from_exponents(G, F, [[1]]).with_entry((1,), (1,), 1)
    assert not chi.is_bilinear()
    ctx = BraidedContext(F, G, chi)
    V = ctx.space("V", [("v", (1,))])
    rep = ctx.check_hexagons(V, V, V)
    assert not rep.passed


def test_super_braiding_is_symmetric_and_signed():
    ctx = super_context()
    assert ctx.chi.is_symmetric()
    V = ctx.space("V", [("v", (1,))])
    assert ctx.braiding(V, V).entry(0, 0) == -1
    assert not z3_context().chi.is_symmetric()


def test_inconsistent_exponent_rejected():
    G = GradingGroup((2,))
    with pytest.raises(StructuralError):
        Bicharacter.from_exponents(G, CyclotomicField(3), [[1]])


# --- rigidity


@pytest.mark.parametrize("make", [lambda: BraidedContext(1), z3_context, super_context])
def test_snake_identities(make):
    ctx = make()
    g = ctx.group.elements()
    V = ctx.space("V", [(f"e{i}", g[i % len(g)]) for i in range(3)])
    assert ctx.check_rigidity(V).passed


def test_dual_grades_are_negated():
    ctx = z3_context()
    V = ctx.space("V", [("a", (1,))])
    Vs, ev, db = ctx.dual_object(V)
    assert ctx.grades(Vs) == ((2,),)
