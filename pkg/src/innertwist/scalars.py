"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is a polynomial in zeta of degree < phi(n) with rational
coefficients, reduced modulo the n-th cyclotomic polynomial.  The
representation is canonical, so equality is coefficient equality.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "FieldMismatchError",
    "CyclotomicField",
    "CycScalar",
    "cyclotomic_polynomial",
    "euler_phi",
]


class FieldMismatchError(ValueError):
    """Scalars from cyclotomic fields of different order were combined."""


# --- integer/rational polynomial helpers (coefficient lists, low degree first)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    """Quotient and remainder of a by b over Q."""
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _trim(a)
    return _trim(q), a


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not r, (n, r)
    assert all(c.denominator == 1 for c in q)
    return tuple(int(c) for c in q)


class CyclotomicField:
    """The field Q(zeta_n); one instance per order is shared."""

    _instances: dict[int, CyclotomicField] = {}

    def __new__(cls, n: int):
        if n in cls._instances:
            return cls._instances[n]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {n!r}")
        self = super().__new__(cls)
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        # x^k mod Phi_n for k < 2*degree - 1, used to reduce products
        d = self.degree
        table = []
        for k in range(max(2 * d - 1, 1)):
            mono = [0] * k + [1]
            _, r = _poly_divmod(mono, self.modulus)
            r = list(r) + [Fraction(0)] * (d - len(r))
            table.append(tuple(r))
        self._power_table = table
        self._one_coeffs = (Fraction(1),) + (Fraction(0),) * (d - 1)
        cls._instances[n] = self
        return self

    def __getnewargs__(self):
        return (self.n,)

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def __reduce__(self):
        return (CyclotomicField, (self.n,))

    # constructors

    def __call__(self, value) -> CycScalar:
        if isinstance(value, CycScalar):
            if value.field is not self:
                raise FieldMismatchError(f"{value.field} vs {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        value = Fraction(value)
        return CycScalar(self, (value,) + (Fraction(0),) * (self.degree - 1))

    @property
    def zero(self) -> CycScalar:
        return self(0)

    @property
    def one(self) -> CycScalar:
        return self(1)

    def zeta(self, k: int = 1) -> CycScalar:
        """The primitive root zeta_n raised to the integer power k."""
        k %= self.n
        return self.from_poly([0] * k + [1])

    def from_poly(self, coeffs) -> CycScalar:
        """Reduce an arbitrary rational polynomial in zeta."""
        d = self.degree
        out = [Fraction(0)] * d
        table = self._power_table
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            if k < len(table):
                row = table[k]
            else:
                _, r = _poly_divmod([0] * k + [1], self.modulus)
                row = list(r) + [Fraction(0)] * (d - len(r))
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
        return CycScalar(self, tuple(out))


class CycScalar:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CyclotomicField, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        self._hash = None

    # coercion

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.n, self.coeffs))
        return self._hash

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.field
        if field.degree == 1:
            return CycScalar(field, (self.coeffs[0] * other.coeffs[0],))
        if other.coeffs == field._one_coeffs:
            return self
        if self.coeffs == field._one_coeffs:
            return other
        if other.is_rational():
            c = other.coeffs[0]
            return CycScalar(field, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return CycScalar(field, tuple(c * b for b in other.coeffs))
        prod = [Fraction(0)] * (2 * field.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return field.from_poly(prod)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        field = self.field
        if self.is_rational():
            return field(1 / self.coeffs[0])
        # invariant: s_k * a == r_k (mod Phi_n)
        r0, r1 = [Fraction(c) for c in field.modulus], _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # Phi_n irreducible: the last remainder is a nonzero constant
        return field.from_poly([x / r1[0] for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # display

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"CycScalar(n={self.field.n}, {self})"


# --- scalar literal syntax: p/q, z, z^k, sums, products, parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|(\^)|([-+*/()]))")


class ScalarSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at column {pos + 1} in {text!r}")
        self.column = pos + 1


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarSyntaxError("unexpected character", text, pos)
        tokens.append((m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    return tokens


def parse_scalar(text: str, field: CyclotomicField) -> CycScalar:
    """Parse a literal such as ``1/2 - 1/2*z^3`` into ``field``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ScalarSyntaxError("unexpected end of literal", text, len(text))
        tok, col = tokens[pos]
        if expected is not None and tok != expected:
            raise ScalarSyntaxError(f"expected {expected!r}", text, col)
        pos += 1
        return tok

    def expr():
        if peek() in ("+", "-"):
            sign = take()
            value = term()
            value = -value if sign == "-" else value
        else:
            value = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term():
        value = factor()
        while peek() in ("*", "/"):
            op = take()
            col = tokens[pos][1] if pos < len(tokens) else len(text)
            rhs = factor()
            if op == "/" and rhs.is_zero():
                raise ScalarSyntaxError("division by zero", text, col)
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor():
        if peek() == "-":
            take()
            return -factor()
        value = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            tok = take()
            if not tok.isdigit():
                raise ScalarSyntaxError("exponent must be an integer", text, tokens[pos - 1][1])
            if sign < 0 and value.is_zero():
                raise ScalarSyntaxError("negative power of zero", text, tokens[pos - 1][1])
            value = value ** (sign * int(tok))
        return value

    def atom():
        tok = peek()
        if tok is None:
            raise ScalarSyntaxError("unexpected end of literal", text, len(text))
        if tok == "(":
            take()
            value = expr()
            take(")")
            return value
        if tok == "z":
            take()
            return field.zeta(1)
        if tok.isdigit():
            take()
            return field(int(tok))
        raise ScalarSyntaxError(f"unexpected token {tok!r}", text, tokens[pos][1])

    if not tokens:
        raise ScalarSyntaxError("empty literal", text, 0)
    value = expr()
    if pos != len(tokens):
        raise ScalarSyntaxError("trailing input", text, tokens[pos][1])
    return value
