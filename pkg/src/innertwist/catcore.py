"""The ambient braided category of G-graded finite-dimensional spaces.

Objects are tensor words of simple graded spaces, so the monoidal structure
is strict on the nose: ``(U*V)*W`` and ``U*(V*W)`` are the same word and the
unit object is the empty word.  Morphisms are sparse grade-preserving
matrices with entries in a cyclotomic field; the braiding is the scaled flip
induced by a bicharacter on the grading group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .linalg import invert_matrix
from .report import Report, compare
from .scalars import CyclotomicField, CycScalar

__all__ = [
    "StructuralError",
    "GradingGroup",
    "Bicharacter",
    "Space",
    "GradedObject",
    "Morphism",
    "BraidedContext",
    "UNIT",
]


class StructuralError(ValueError):
    """Ill-typed composition, tensor, or grade violation."""


# --- grading group and bicharacters


@dataclass(frozen=True)
class GradingGroup:
    """G = Z/n1 x ... x Z/nk with elements as reduced integer tuples."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(n) for n in self.factors))
        if any(n < 1 for n in self.factors):
            raise ValueError(f"group factors must be positive: {self.factors}")

    @property
    def zero(self):
        return (0,) * len(self.factors)

    def reduce(self, g):
        g = tuple(g)
        if len(g) != len(self.factors):
            raise StructuralError(f"grade {g} has wrong length for group {self.factors}")
        return tuple(x % n for x, n in zip(g, self.factors))

    def contains(self, g) -> bool:
        return (isinstance(g, tuple) and len(g) == len(self.factors)
                and all(isinstance(x, int) and 0 <= x < n for x, n in zip(g, self.factors)))

    def add(self, g, h):
        return tuple((x + y) % n for x, y, n in zip(g, h, self.factors))

    def neg(self, g):
        return tuple((-x) % n for x, n in zip(g, self.factors))

    def elements(self):
        return list(itertools.product(*(range(n) for n in self.factors)))

    @property
    def order(self) -> int:
        out = 1
        for n in self.factors:
            out *= n
        return out


class Bicharacter:
    """A function chi: G x G -> roots of unity in the session field.

    Built from an exponent matrix E as chi(g, h) = zeta^(g^T E h), or from an
    explicit table (which need not be bilinear, for negative tests).
    """

    def __init__(self, group: GradingGroup, field: CyclotomicField, table):
        self.group = group
        self.field = field
        self.table = {k: field(v) for k, v in table.items()}

    @classmethod
    def from_exponents(cls, group: GradingGroup, field: CyclotomicField, exponents=None):
        k = len(group.factors)
        if exponents is None:
            exponents = [[0] * k for _ in range(k)]
        exponents = [list(row) for row in exponents]
        if len(exponents) != k or any(len(row) != k for row in exponents):
            raise StructuralError(f"exponent matrix must be {k}x{k}")
        n = field.n
        # well-definedness on Z/n_i x Z/n_j
        for i, j in itertools.product(range(k), repeat=2):
            ni, nj = group.factors[i], group.factors[j]
            if (ni * exponents[i][j]) % n or (nj * exponents[i][j]) % n:
                raise StructuralError(
                    f"exponent E[{i}][{j}]={exponents[i][j]} is not well defined "
                    f"on Z/{ni} x Z/{nj} with zeta_{n}")
        table = {}
        elems = group.elements()
        for g in elems:
            for h in elems:
                e = sum(g[i] * exponents[i][j] * h[j] for i in range(k) for j in range(k))
                table[(g, h)] = field.zeta(e)
        bc = cls(group, field, table)
        bc.exponents = exponents
        return bc

    @classmethod
    def trivial(cls, group: GradingGroup, field: CyclotomicField):
        return cls.from_exponents(group, field)

    def __call__(self, g, h) -> CycScalar:
        try:
            return self.table[(g, h)]
        except KeyError:
            raise StructuralError(f"grade pair {(g, h)} outside the grading group") from None

    def with_entry(self, g, h, value) -> Bicharacter:
        table = dict(self.table)
        table[(g, h)] = self.field(value)
        return Bicharacter(self.group, self.field, table)

    def is_bilinear(self) -> bool:
        G = self.group
        elems = G.elements()
        for g, g2, h in itertools.product(elems, repeat=3):
            if self(G.add(g, g2), h) != self(g, h) * self(g2, h):
                return False
            if self(h, G.add(g, g2)) != self(h, g) * self(h, g2):
                return False
        return True

    def is_symmetric(self) -> bool:
        elems = self.group.elements()
        return all(self(g, h) * self(h, g) == 1 for g in elems for h in elems)


# --- objects


@dataclass(frozen=True)
class Space:
    """A simple graded space: an ordered basis of (label, grade) pairs."""

    name: str
    labels: tuple[str, ...]
    grades: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "grades", tuple(tuple(g) for g in self.grades))
        if len(self.labels) != len(self.grades):
            raise StructuralError(f"space {self.name}: labels and grades differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise StructuralError(f"space {self.name}: labels must be unique")

    @property
    def dim(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class GradedObject:
    """A tensor word of simple spaces; the empty word is the unit object."""

    factors: tuple[Space, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def simple(cls, name, basis) -> GradedObject:
        labels = [b[0] for b in basis]
        grades = [b[1] for b in basis]
        return cls((Space(name, tuple(labels), tuple(grades)),))

    def __matmul__(self, other: GradedObject) -> GradedObject:
        if not isinstance(other, GradedObject):
            return NotImplemented
        return GradedObject(self.factors + other.factors)

    def __pow__(self, k: int) -> GradedObject:
        return GradedObject(self.factors * k)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    @cached_property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.factors)

    @cached_property
    def dim(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    @property
    def name(self) -> str:
        if not self.factors:
            return "I"
        return "*".join(s.name for s in self.factors)

    def multi_index(self, flat: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.dims):
            flat, r = divmod(flat, d)
            out.append(r)
        return tuple(reversed(out))

    def flat_index(self, multi) -> int:
        flat = 0
        for i, d in zip(multi, self.dims):
            flat = flat * d + i
        return flat

    def label(self, flat: int) -> str:
        if not self.factors:
            return "1"
        return "*".join(s.labels[i] for s, i in zip(self.factors, self.multi_index(flat)))

    def grade_components(self, flat: int):
        return tuple(s.grades[i] for s, i in zip(self.factors, self.multi_index(flat)))

    def __repr__(self):
        return f"GradedObject({self.name})"


UNIT = GradedObject()


def _tensor_grades(group: GradingGroup, obj: GradedObject):
    out = []
    for flat in range(obj.dim):
        g = group.zero
        for h in obj.grade_components(flat):
            g = group.add(g, h)
        out.append(g)
    return tuple(out)


# --- morphisms


class Morphism:
    """A matrix between graded objects, stored as sparse columns.

    ``cols[j]`` maps target index -> nonzero scalar for source basis j.
    """

    __slots__ = ("source", "target", "field", "cols", "name")

    def __init__(self, source: GradedObject, target: GradedObject, field: CyclotomicField,
                 cols=None, name: str | None = None):
        self.source = source
        self.target = target
        self.field = field
        if cols is None:
            cols = [{} for _ in range(source.dim)]
        if len(cols) != source.dim:
            raise StructuralError(
                f"morphism {name or ''}: {len(cols)} columns for source of dim {source.dim}")
        clean = []
        for col in cols:
            c = {}
            for i, v in col.items():
                if not 0 <= i < target.dim:
                    raise StructuralError(f"row index {i} out of range for {target.name}")
                v = field(v)
                if not v.is_zero():
                    c[i] = v
            clean.append(c)
        self.cols = clean
        self.name = name

    # construction helpers

    @classmethod
    def _trusted(cls, source, target, field, cols, name=None) -> Morphism:
        """Internal constructor for columns already reduced to nonzero field elements."""
        f = object.__new__(cls)
        f.source, f.target, f.field, f.cols, f.name = source, target, field, cols, name
        return f

    @classmethod
    def from_dense(cls, source, target, field, rows, name=None):
        rows = list(rows)
        if len(rows) != target.dim or any(len(r) != source.dim for r in rows):
            raise StructuralError(
                f"matrix {name or ''} must be {target.dim}x{source.dim}")
        cols = [{} for _ in range(source.dim)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = field(v)
                if not v.is_zero():
                    cols[j][i] = v
        return cls(source, target, field, cols, name)

    @classmethod
    def identity(cls, obj: GradedObject, field: CyclotomicField):
        return cls(obj, obj, field, [{j: field.one} for j in range(obj.dim)])

    @classmethod
    def zero(cls, source, target, field):
        return cls(source, target, field)

    def to_dense(self):
        rows = [[self.field.zero] * self.source.dim for _ in range(self.target.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def entry(self, i: int, j: int) -> CycScalar:
        return self.cols[j].get(i, self.field.zero)

    @property
    def shape(self):
        return (self.target.dim, self.source.dim)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    # algebra

    def _check_field(self, other):
        if other.field is not self.field:
            raise StructuralError(f"field mismatch {self.field} vs {other.field}")

    def __matmul__(self, other: Morphism) -> Morphism:
        """Composition: ``g @ f`` is g after f."""
        if not isinstance(other, Morphism):
            return NotImplemented
        self._check_field(other)
        if other.target != self.source:
            raise StructuralError(
                f"cannot compose {self.source.name}->{self.target.name} after "
                f"{other.source.name}->{other.target.name}")
        zero = self.field.zero
        mine = self.cols
        out = []
        for col in other.cols:
            acc = {}
            for k, a in col.items():
                for i, b in mine[k].items():
                    acc[i] = acc.get(i, zero) + a * b
            out.append({i: v for i, v in acc.items() if not v.is_zero()})
        return Morphism._trusted(other.source, self.target, self.field, out)

    def tensor(self, other: Morphism) -> Morphism:
        self._check_field(other)
        src = self.source @ other.source
        tgt = self.target @ other.target
        m = other.target.dim
        one = self.field.one.coeffs
        out = []
        for cf in self.cols:
            for cg in other.cols:
                col = {}
                for i1, a in cf.items():
                    base = i1 * m
                    if a.coeffs == one:
                        for i2, b in cg.items():
                            col[base + i2] = b
                    else:
                        for i2, b in cg.items():
                            col[base + i2] = a * b
                out.append(col)
        return Morphism._trusted(src, tgt, self.field, out)

    def __add__(self, other: Morphism) -> Morphism:
        self._check_field(other)
        if (self.source, self.target) != (other.source, other.target):
            raise StructuralError("cannot add morphisms of different types")
        zero = self.field.zero
        out = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for i, v in b.items():
                col[i] = col.get(i, zero) + v
            out.append(col)
        return Morphism(self.source, self.target, self.field, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> Morphism:
        c = self.field(c)
        return Morphism(self.source, self.target, self.field,
                        [{i: v * c for i, v in col.items()} for col in self.cols])

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.field is other.field and self.cols == other.cols)

    __hash__ = None

    def first_difference(self, other: Morphism):
        """(row, col, mine, theirs) for the first differing entry, or None."""
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                for i in sorted(set(a) | set(b)):
                    x = a.get(i, self.field.zero)
                    y = b.get(i, self.field.zero)
                    if x != y:
                        return i, j, x, y
        return None

    def with_entry(self, i: int, j: int, value) -> Morphism:
        cols = [dict(c) for c in self.cols]
        cols[j][i] = self.field(value)
        return Morphism(self.source, self.target, self.field, cols, self.name)

    def renamed(self, name) -> Morphism:
        return Morphism(self.source, self.target, self.field, self.cols, name)

    def retyped(self, source: GradedObject, target: GradedObject) -> Morphism:
        """Same matrix viewed between objects of equal dimension."""
        if source.dim != self.source.dim or target.dim != self.target.dim:
            raise StructuralError("retyping must preserve dimensions")
        return Morphism(source, target, self.field, self.cols, self.name)

    def inverse(self) -> Morphism | None:
        if self.source.dim != self.target.dim:
            return None
        inv = invert_matrix(self.cols, self.source.dim, self.field)
        if inv is None:
            return None
        return Morphism(self.target, self.source, self.field, inv)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def grade_violations(self, group: GradingGroup):
        """Entries (i, j) joining basis vectors of different total grade."""
        sg = _tensor_grades(group, self.source)
        tg = _tensor_grades(group, self.target)
        bad = []
        for j, col in enumerate(self.cols):
            for i in col:
                if tg[i] != sg[j]:
                    bad.append((i, j))
        return bad

    def __repr__(self):
        nm = f"{self.name}: " if self.name else ""
        return f"Morphism({nm}{self.source.name} -> {self.target.name}, nnz={self.nnz()})"


# --- the braided context


class BraidedContext:
    """Session data: coefficient field, grading group and braiding bicharacter."""

    def __init__(self, field: CyclotomicField | int = 1, group: GradingGroup | None = None,
                 chi: Bicharacter | None = None):
        if isinstance(field, int):
            field = CyclotomicField(field)
        self.field = field
        self.group = group if group is not None else GradingGroup(())
        self.chi = chi if chi is not None else Bicharacter.trivial(self.group, field)
        if self.chi.field is not field:
            raise StructuralError("bicharacter lives in a different field")
        self._cache = {}

    # objects

    def space(self, name, basis) -> GradedObject:
        """A simple object; ``basis`` is a list of (label, grade) or labels."""
        norm = []
        for b in basis:
            if isinstance(b, str):
                label, grade = b, self.group.zero
            else:
                label, grade = b
                grade = tuple(grade) if not isinstance(grade, int) else (grade,)
                if not self.group.contains(grade):
                    raise StructuralError(
                        f"grade {grade} of {name}.{label} outside group {self.group.factors}")
            norm.append((label, grade))
        return GradedObject.simple(name, norm)

    def grades(self, obj: GradedObject):
        key = ("grades", obj)
        if key not in self._cache:
            for s in obj.factors:
                for g in s.grades:
                    if not self.group.contains(g):
                        raise StructuralError(f"grade {g} in {s.name} outside the grading group")
            self._cache[key] = _tensor_grades(self.group, obj)
        return self._cache[key]

    # morphism helpers

    def id(self, obj: GradedObject) -> Morphism:
        return Morphism.identity(obj, self.field)

    def zero(self, source, target) -> Morphism:
        return Morphism.zero(source, target, self.field)

    def morphism(self, source, target, rows, name=None, check=True) -> Morphism:
        f = Morphism.from_dense(source, target, self.field, rows, name)
        if check:
            self.require_grade_preserving(f)
        return f

    def sparse(self, source, target, entries, name=None, check=True) -> Morphism:
        """Morphism from ``{(row, col): value}``."""
        cols = [{} for _ in range(source.dim)]
        for (i, j), v in entries.items():
            cols[j][i] = v
        f = Morphism(source, target, self.field, cols, name)
        if check:
            self.require_grade_preserving(f)
        return f

    def functional(self, source, values, name=None, check=True) -> Morphism:
        """A morphism ``source -> I`` from a row of values."""
        return self.morphism(source, UNIT, [list(values)], name, check)

    def require_grade_preserving(self, f: Morphism):
        bad = f.grade_violations(self.group)
        if bad:
            i, j = bad[0]
            raise StructuralError(
                f"morphism {f.name or ''} not grade preserving at entry ({i},{j}): "
                f"{f.target.label(i)} <- {f.source.label(j)}")

    def tensor(self, *fs: Morphism) -> Morphism:
        out = fs[0]
        for f in fs[1:]:
            out = out.tensor(f)
        return out

    def compose(self, *fs: Morphism) -> Morphism:
        """``compose(f, g, h)`` is f after g after h."""
        out = fs[-1]
        for f in reversed(fs[:-1]):
            out = f @ out
        return out

    # braiding

    def _scaled_flip(self, V: GradedObject, W: GradedObject, coeff) -> Morphism:
        gv, gw = self.grades(V), self.grades(W)
        dw = W.dim
        dv = V.dim
        cols = []
        for a in range(dv):
            for b in range(dw):
                c = coeff(gv[a], gw[b])
                cols.append({b * dv + a: c})
        return Morphism(V @ W, W @ V, self.field, cols)

    def braiding(self, V: GradedObject, W: GradedObject) -> Morphism:
        """tau_{V,W}(v*w) = chi(|v|,|w|) w*v."""
        key = ("tau", V, W)
        if key not in self._cache:
            self._cache[key] = self._scaled_flip(V, W, lambda g, h: self.chi(g, h))
        return self._cache[key]

    def braiding_inverse(self, V: GradedObject, W: GradedObject) -> Morphism:
        """The inverse of tau_{V,W}, a map W*V -> V*W."""
        key = ("tauinv", V, W)
        if key not in self._cache:
            self._cache[key] = self._scaled_flip(
                W, V, lambda h, g: self.chi(g, h).inverse())
        return self._cache[key]

    # rigidity

    def dual_object(self, V: GradedObject):
        """(V*, ev, db) with grade(v*) = -grade(v)."""
        g = self.grades(V)
        basis = [(V.label(i) + "^", self.group.neg(g[i])) for i in range(V.dim)]
        Vs = GradedObject.simple(V.name + "^", basis)
        n = V.dim
        ev = self.sparse(Vs @ V, UNIT, {(0, i * n + i): 1 for i in range(n)}, name="ev")
        db = self.sparse(UNIT, V @ Vs, {(i * n + i, 0): 1 for i in range(n)}, name="db")
        return Vs, ev, db

    def check_rigidity(self, V: GradedObject, instance: str = "") -> Report:
        Vs, ev, db = self.dual_object(V)
        rep = Report()
        inst = instance or V.name
        rep.add(compare("snake V", self.id(V),
                        (self.id(V).tensor(ev)) @ (db.tensor(self.id(V))), inst))
        rep.add(compare("snake V*", self.id(Vs),
                        (ev.tensor(self.id(Vs))) @ (self.id(Vs).tensor(db)), inst))
        rep.add(Report.boolean("ev, db grade preserving",
                               not ev.grade_violations(self.group)
                               and not db.grade_violations(self.group), inst))
        return rep

    def check_hexagons(self, A: GradedObject, B: GradedObject, C: GradedObject,
                       morphisms=(), instance: str = "") -> Report:
        """Both hexagons on (A, B, C) and naturality of tau on given pairs (f, g)."""
        t = self.braiding
        I = self.id
        inst = instance or f"{A.name},{B.name},{C.name}"
        rep = Report()
        rep.add(compare("hexagon 1", t(A @ B, C),
                        t(A, C).tensor(I(B)) @ I(A).tensor(t(B, C)), inst))
        rep.add(compare("hexagon 2", t(A, B @ C),
                        I(B).tensor(t(A, C)) @ t(A, B).tensor(I(C)), inst))
        for X, Y in ((A, B), (B, C), (A, C)):
            rep.add(compare("tau invertible", t(X, Y) @ self.braiding_inverse(X, Y),
                            I(Y @ X), f"{X.name},{Y.name}"))
            rep.add(compare("tau invertible", self.braiding_inverse(X, Y) @ t(X, Y),
                            I(X @ Y), f"{X.name},{Y.name}"))
        for f, g in morphisms:
            rep.add(compare("tau natural",
                            t(f.target, g.target) @ f.tensor(g),
                            g.tensor(f) @ t(f.source, g.source),
                            f"{f.name},{g.name}"))
        return rep
