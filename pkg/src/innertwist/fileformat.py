"""Reader for ``.itw`` structure-definition files.

A file is a sequence of statements; ``#`` starts a comment::

    field n=3
    group 3                       # grading group Z/3 (omit for trivial grading)
    bichar { 1 }                  # exponent matrix, rows separated by ';'
    object B { g0:(0), g1:(0), g2:(0) }
    morphism m: B*B -> B { 1,0,0, 0,0,1, 0,1,0 ; ... }
    functional eps on B { 1, 1, 1 }
    coalgebra C on X { comult = d, counit = e }
    algebra A on X { mult = m, unit = u }
    bialgebra H on B { mult = m, unit = eta, comult = Delta, counit = eps }
    hopf H on B { mult = m, unit = eta, comult = Delta, counit = eps, antipode = S }
    central H { sigma = braiding }        # or: sigma[X] = s, ... per object X
    cqt H { r = r }
    bicharacter C { seed = r11 }          # C: a central coalgebra

Matrix bodies list rows separated by ';' and entries separated by ','.
Entries are scalar literals (``1/2 - z^2``).  Objects are written as
``*``-joined names, ``I`` is the unit.  Every error carries a line and
column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .catcore import (UNIT, Bicharacter, BraidedContext, GradedObject, GradingGroup,
                      StructuralError)
from .central import CentralBialgebra, HalfBraiding
from .hopf import Algebra, Bialgebra, Coalgebra, solve_antipode
from .scalars import ScalarSyntaxError, parse_scalar

__all__ = ["ParseError", "Session", "parse_structure_text", "parse_structure_file"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message, self.line, self.col = message, line, col


@dataclass(eq=False)
class Session:
    ctx: BraidedContext
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    coalgebras: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    bialgebras: dict = field(default_factory=dict)
    centrals: dict = field(default_factory=dict)        # name -> CentralBialgebra
    central_coalgebras: dict = field(default_factory=dict)
    cqts: dict = field(default_factory=dict)            # bialgebra name -> r
    bicharacters: dict = field(default_factory=dict)    # coalgebra name -> seed

    @property
    def is_empty(self) -> bool:
        return not (self.objects or self.morphisms)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_^']*")
_KEYWORDS = ("field", "group", "bichar", "object", "morphism", "functional", "coalgebra",
             "algebra", "bialgebra", "hopf", "central", "cqt", "bicharacter")


class _Reader:
    def __init__(self, text: str):
        # blank out comments, keeping offsets
        self.text = re.sub(r"#[^\n]*", lambda mt: " " * len(mt.group()), text)
        self.pos = 0
        self.line_starts = [0] + [mt.end() for mt in re.finditer("\n", text)]

    def where(self, pos: int):
        lo, hi = 0, len(self.line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.line_starts[mid] <= pos:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, pos - self.line_starts[lo] + 1

    def error(self, msg, pos=None) -> ParseError:
        return ParseError(msg, *self.where(self.pos if pos is None else pos))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def name(self, what="name"):
        self.skip_ws()
        mt = _NAME.match(self.text, self.pos)
        if not mt:
            raise self.error(f"expected {what}")
        self.pos = mt.end()
        return mt.group(), mt.start()

    def expect(self, s):
        self.skip_ws()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos:self.pos + 1] or "end of file"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def peek(self, s):
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def until(self, stop: str):
        """Raw text up to (not including) ``stop`` on the current logical unit."""
        start = self.pos
        end = self.text.find(stop, start)
        if end < 0:
            raise self.error(f"missing {stop!r}", start)
        self.pos = end
        return self.text[start:end], start

    def block(self):
        """``{ ... }`` -> (body text, body start offset)."""
        self.expect("{")
        body, start = self.until("}")
        self.pos += 1
        return body, start

    def rest_of_line(self):
        start = self.pos
        end = self.text.find("\n", start)
        end = len(self.text) if end < 0 else end
        self.pos = end
        return self.text[start:end], start


def _split(body: str, start: int, sep: str):
    """Split keeping absolute offsets of each (stripped) piece."""
    out, off = [], 0
    for piece in body.split(sep):
        lead = len(piece) - len(piece.lstrip())
        out.append((piece.strip(), start + off + lead))
        off += len(piece) + 1
    return out


class _Parser:
    def __init__(self, text: str):
        self.r = _Reader(text)
        self.session = None
        self._field_n = 1
        self._group = GradingGroup(())
        self._exponents = None

    # session setup is lazy so that field/group/bichar may precede objects
    def ctx(self, pos) -> BraidedContext:
        if self.session is None:
            ctx = BraidedContext(self._field_n, self._group)
            if self._exponents is not None:
                try:
                    ctx.chi = Bicharacter.from_exponents(self._group, ctx.field, self._exponents)
                except StructuralError as exc:
                    raise self.r.error(str(exc), pos) from None
            self.session = Session(ctx)
        return self.session.ctx

    def parse(self) -> Session:
        while not self.r.at_end():
            kw, pos = self.r.name("statement keyword")
            if kw not in _KEYWORDS:
                raise self.r.error(f"unknown statement {kw!r}", pos)
            getattr(self, "st_" + kw)(pos)
        self.ctx(0)
        return self.session

    def _preamble(self, pos, what):
        if self.session is not None:
            raise self.r.error(f"'{what}' must precede all objects and structures", pos)

    # --- preamble statements

    def st_field(self, pos):
        self._preamble(pos, "field")
        text, start = self.r.rest_of_line()
        mt = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*", text)
        if not mt or int(mt.group(1)) < 1:
            raise self.r.error("expected 'field n=<positive integer>'", start)
        self._field_n = int(mt.group(1))

    def st_group(self, pos):
        self._preamble(pos, "group")
        text, start = self.r.rest_of_line()
        try:
            factors = tuple(int(t) for t in text.split())
        except ValueError:
            raise self.r.error("group factors must be integers", start) from None
        if any(f < 1 for f in factors):
            raise self.r.error("group factors must be positive", start)
        self._group = GradingGroup(factors)

    def st_bichar(self, pos):
        self._preamble(pos, "bichar")
        body, start = self.r.block()
        rows = []
        for row, rpos in _split(body, start, ";"):
            try:
                rows.append([int(t) for t in row.replace(",", " ").split()])
            except ValueError:
                raise self.r.error("bicharacter exponents must be integers", rpos) from None
        k = len(self._group.factors)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise self.r.error(f"exponent matrix must be {k}x{k}", start)
        self._exponents = rows

    # --- objects and morphisms

    def st_object(self, pos):
        ctx = self.ctx(pos)
        name, npos = self.r.name("object name")
        if name == "I" or name in self.session.objects:
            raise self.r.error(f"object {name!r} already defined", npos)
        body, start = self.r.block()
        basis = []
        k = len(ctx.group.factors)
        for item, ipos in _split(body, start, ","):
            if not item:
                continue
            mt = re.fullmatch(r"([A-Za-z0-9_^']+)\s*(?::\s*\(([^)]*)\))?", item)
            if not mt:
                raise self.r.error(f"bad basis entry {item!r}", ipos)
            label, grade = mt.group(1), mt.group(2)
            if grade is None:
                g = ctx.group.zero
            else:
                try:
                    g = tuple(int(t) for t in grade.replace(",", " ").split())
                except ValueError:
                    raise self.r.error(f"bad grade in {item!r}", ipos) from None
                if len(g) != k:
                    raise self.r.error(f"grade of {label} must have {k} components", ipos)
            basis.append((label, g))
        if not basis:
            raise self.r.error(f"object {name} has no basis", start)
        try:
            self.session.objects[name] = ctx.space(name, basis)
        except StructuralError as exc:
            raise self.r.error(str(exc), start) from None

    def obj(self, text, pos) -> GradedObject:
        out = UNIT
        for mt in re.finditer(r"[^*]+", text):
            part = mt.group().strip()
            if part == "I":
                continue
            if part not in self.session.objects:
                ppos = pos + mt.start() + len(mt.group()) - len(mt.group().lstrip())
                raise self.r.error(f"unknown object {part!r}", ppos)
            out = out @ self.session.objects[part]
        return out

    def matrix(self, body, start, src, tgt, name):
        ctx = self.session.ctx
        rows = []
        for row, rpos in _split(body, start, ";"):
            if not row:
                continue
            entries = []
            for ent, epos in _split(row, rpos, ","):
                try:
                    entries.append(parse_scalar(ent, ctx.field))
                except ScalarSyntaxError as exc:
                    raise self.r.error(f"in {name}: {exc}", epos + exc.column - 1) from None
            if len(entries) != src.dim:
                raise self.r.error(f"{name}: row has {len(entries)} entries, "
                                   f"expected {src.dim} (dim {src.name})", rpos)
            rows.append(entries)
        if len(rows) != tgt.dim:
            first = start + len(body) - len(body.lstrip())
            raise self.r.error(f"{name}: {len(rows)} rows, expected {tgt.dim} (dim {tgt.name})",
                               first)
        try:
            return ctx.morphism(src, tgt, rows, name)
        except StructuralError as exc:
            raise self.r.error(str(exc), start) from None

    def _new_morphism(self, name, npos):
        if name in self.session.morphisms:
            raise self.r.error(f"morphism {name!r} already defined", npos)

    def st_morphism(self, pos):
        self.ctx(pos)
        name, npos = self.r.name("morphism name")
        self._new_morphism(name, npos)
        self.r.expect(":")
        src_text, spos = self.r.until("->")
        self.r.pos += 2
        tgt_text, tpos = self.r.until("{")
        src, tgt = self.obj(src_text, spos), self.obj(tgt_text, tpos)
        body, start = self.r.block()
        self.session.morphisms[name] = self.matrix(body, start, src, tgt, name)

    def st_functional(self, pos):
        self.ctx(pos)
        name, npos = self.r.name("functional name")
        self._new_morphism(name, npos)
        kw, kpos = self.r.name("'on'")
        if kw != "on":
            raise self.r.error("expected 'on'", kpos)
        src_text, spos = self.r.until("{")
        src = self.obj(src_text, spos)
        body, start = self.r.block()
        self.session.morphisms[name] = self.matrix(body, start, src, UNIT, name)

    # --- structures

    def assignments(self, body, start):
        out = {}
        for item, ipos in _split(body, start, ","):
            if not item:
                continue
            mt = re.fullmatch(r"([A-Za-z_]+)(?:\[([^\]]+)\])?\s*=\s*([A-Za-z0-9_^']+)", item)
            if not mt:
                raise self.r.error(f"bad assignment {item!r}", ipos)
            key = (mt.group(1), mt.group(2).strip() if mt.group(2) else None)
            out[key] = (mt.group(3), ipos)
        return out

    def lookup(self, assigns, key, pos, optional=False):
        if (key, None) not in assigns:
            if optional:
                return None
            raise self.r.error(f"missing '{key}'", pos)
        name, ipos = assigns[(key, None)]
        if name not in self.session.morphisms:
            raise self.r.error(f"unknown morphism {name!r}", ipos)
        return self.session.morphisms[name]

    def _structure_header(self, pos):
        self.ctx(pos)
        name, npos = self.r.name("structure name")
        kw, kpos = self.r.name("'on'")
        if kw != "on":
            raise self.r.error("expected 'on'", kpos)
        oname, opos = self.r.until("{")
        carrier = self.obj(oname, opos)
        body, start = self.r.block()
        return name, npos, carrier, self.assignments(body, start), start

    def _wrap(self, build, pos):
        try:
            return build()
        except StructuralError as exc:
            raise self.r.error(str(exc), pos) from None

    def st_coalgebra(self, pos):
        name, npos, X, a, start = self._structure_header(pos)
        self.session.coalgebras[name] = self._wrap(lambda: Coalgebra(
            X, self.lookup(a, "comult", start), self.lookup(a, "counit", start), name), npos)

    def st_algebra(self, pos):
        name, npos, X, a, start = self._structure_header(pos)
        self.session.algebras[name] = self._wrap(lambda: Algebra(
            X, self.lookup(a, "mult", start), self.lookup(a, "unit", start), name), npos)

    def _bialgebra(self, pos, hopf):
        name, npos, X, a, start = self._structure_header(pos)
        B = self._wrap(lambda: Bialgebra(
            X, self.lookup(a, "mult", start), self.lookup(a, "unit", start),
            self.lookup(a, "comult", start), self.lookup(a, "counit", start),
            self.lookup(a, "antipode", start, optional=True), name), npos)
        if hopf and B.antipode is None:
            S = solve_antipode(self.session.ctx, B)
            if S is None:
                raise self.r.error(f"{name} has no antipode (convolution inverse of id)", npos)
            B = B.with_antipode(S)
        self.session.bialgebras[name] = B
        self.session.coalgebras.setdefault(name, B.coalgebra)

    def st_bialgebra(self, pos):
        self._bialgebra(pos, hopf=False)

    def st_hopf(self, pos):
        self._bialgebra(pos, hopf=True)

    def st_central(self, pos):
        ctx = self.ctx(pos)
        name, npos = self.r.name("bialgebra or coalgebra name")
        body, start = self.r.block()
        s = self.session
        if name in s.bialgebras:
            owner = s.bialgebras[name].carrier
        elif name in s.coalgebras:
            owner = s.coalgebras[name].carrier
        else:
            raise self.r.error(f"unknown bialgebra or coalgebra {name!r}", npos)
        if re.fullmatch(r"\s*sigma\s*=\s*braiding\s*", body):
            hb = HalfBraiding.braiding(ctx, owner)
        else:
            comps = {}
            for (key, arg), (mname, ipos) in self.assignments(body, start).items():
                if key != "sigma" or arg is None:
                    raise self.r.error("expected 'sigma = braiding' or 'sigma[X] = f'", ipos)
                if mname not in s.morphisms:
                    raise self.r.error(f"unknown morphism {mname!r}", ipos)
                comps[self.obj(arg, ipos)] = s.morphisms[mname]
            hb = self._wrap(lambda: HalfBraiding(ctx, owner, comps), start)
        if name in s.bialgebras:
            s.centrals[name] = CentralBialgebra(s.bialgebras[name], hb)
        else:
            from .tensoralg import CentralCoalgebra
            s.central_coalgebras[name] = CentralCoalgebra(s.coalgebras[name], hb)

    def st_cqt(self, pos):
        self.ctx(pos)
        name, npos = self.r.name("central bialgebra name")
        if name not in self.session.centrals:
            raise self.r.error(f"{name!r} is not a declared central bialgebra", npos)
        body, start = self.r.block()
        r = self.lookup(self.assignments(body, start), "r", start)
        B = self.session.centrals[name].carrier
        if (r.source, r.target) != (B @ B, UNIT):
            raise self.r.error(f"r must be a functional on {B.name}*{B.name}", start)
        self.session.cqts[name] = r

    def st_bicharacter(self, pos):
        self.ctx(pos)
        name, npos = self.r.name("central coalgebra name")
        s = self.session
        if name not in s.central_coalgebras:
            if name in s.coalgebras:
                from .tensoralg import CentralCoalgebra
                s.central_coalgebras[name] = CentralCoalgebra(
                    s.coalgebras[name], HalfBraiding.braiding(s.ctx, s.coalgebras[name].carrier))
            else:
                raise self.r.error(f"unknown coalgebra {name!r}", npos)
        body, start = self.r.block()
        seed = self.lookup(self.assignments(body, start), "seed", start)
        C = s.central_coalgebras[name].carrier
        if (seed.source, seed.target) != (C @ C, UNIT):
            raise self.r.error(f"seed must be a functional on {C.name}*{C.name}", start)
        s.bicharacters[name] = seed


def parse_structure_text(text: str) -> Session:
    return _Parser(text).parse()


def parse_structure_file(path) -> Session:
    return parse_structure_text(Path(path).read_text())
