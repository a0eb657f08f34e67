"""Multivariate polynomials over GF(q) and monomial orders.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
raw field codes, bound to a :class:`Ring` (field, variable names).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf, textparse
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    ParseError,
    RingMismatch,
    ZeroPolynomial,
)

MAX_EXPONENT = (1 << 15) - 1


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``elim`` (block order on the first ``block`` variables).

    Every order is x_1 > x_2 > ... > x_m.  ``elim(b)`` compares the total
    degree in x_1..x_b first and breaks ties by grevlex on all variables.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    def key(self, exps):
        """Sort key: larger key means larger monomial."""
        if self.kind == "lex":
            return exps
        grev = (sum(exps),) + tuple(-e for e in reversed(exps))
        if self.kind == "grevlex":
            return grev
        return (sum(exps[: self.block]),) + grev

    def weights(self, m):
        """Weight matrix W with ``u < v`` iff ``W u < W v`` lexicographically."""
        if self.kind == "lex":
            return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
        rows = [tuple([1] * m)]
        for i in range(m - 1, 0, -1):
            rows.append(tuple(-int(j == i) for j in range(m)))
        if self.kind == "elim":
            rows.insert(0, tuple(int(j < self.block) for j in range(m)))
        return tuple(rows)

    def compare(self, u, v):
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elim(block):
    return MonomialOrder("elim", block)


@dataclass(frozen=True)
class Ring:
    """S = GF(q)[x_1..x_m] with named variables."""

    field: gf.FieldSpec
    names: tuple

    @property
    def nvars(self):
        return len(self.names)

    def __repr__(self):
        return f"GF({self.field.q})[{', '.join(self.names)}]"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: 1})

    def const(self, value):
        code = self.field(value).value if not isinstance(value, int) else self.field.from_int(value)
        return Polynomial(self, {(0,) * self.nvars: code} if code else {})

    def var(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        if len(exps) != self.nvars:
            raise DimensionMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        return Polynomial(self, {tuple(exps): coeff} if coeff else {})

    def monomials_of_degree(self, d):
        """All exponent tuples of total degree d, descending in grevlex."""
        out = []
        m = self.nvars
        for combo in itertools.combinations_with_replacement(range(m), d):
            e = [0] * m
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=GREVLEX.key, reverse=True)
        return out

    def with_prepended(self, name="_t"):
        """Ring with an auxiliary variable at index 0."""
        while name in self.names:
            name = "_" + name
        return Ring(self.field, (name,) + self.names)

    def parse(self, text):
        return parse_polynomial(text, self)

    def check(self, other):
        if other.ring != self:
            raise RingMismatch(f"{other.ring!r} polynomial used in {self!r}")


def polynomial_ring(q, names):
    """Convenience constructor: ``polynomial_ring(4, 3)`` or ``polynomial_ring(4, ["x","y"])``."""
    field = q if isinstance(q, gf.FieldSpec) else gf.make_field(q)
    if isinstance(names, int):
        names = [f"x{i + 1}" for i in range(names)]
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    if "g" in names:
        raise ValueError("'g' is reserved for the field generator")
    return Ring(field, names)


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction helpers ----------------------------------------------
    @classmethod
    def from_terms(cls, ring, items):
        field = ring.field
        terms = {}
        for exps, c in items:
            if c:
                prev = terms.get(exps)
                c = c if prev is None else field.add(prev, c)
                if c:
                    terms[exps] = c
                else:
                    del terms[exps]
        return cls(ring, terms)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring!r} vs {self.ring!r}")
            return other
        if isinstance(other, (int, gf.FieldElement)):
            if isinstance(other, gf.FieldElement) and other.field != self.ring.field:
                raise FieldMismatch("coefficient from another field")
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            prev = terms.get(e)
            if prev is None:
                terms[e] = c
            else:
                s = field.add(prev, c)
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        mul, add = field.mul, field.add
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                prev = terms.get(e)
                terms[e] = c if prev is None else add(prev, c)
        return Polynomial(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        """Multiply by a raw field code."""
        if not c:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(self.ring, {e: mul(c, v) for e, v in self.terms.items()})

    def mul_monomial(self, exps, c=1):
        mul = self.ring.field.mul
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): mul(c, v) for e, v in self.terms.items()},
        )

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scale(self.ring.field.inv(lc))

    # -- inspection ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, gf.FieldElement)):
            other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, order=GREVLEX):
        """``(exps, code)`` pairs, descending in ``order``."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order=GREVLEX):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=GREVLEX):
        return self.leading_term(order)[0]

    def coefficient(self, exps):
        return gf.FieldElement(self.ring.field, self.terms.get(tuple(exps), 0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        """True iff all terms share one degree (the zero polynomial counts)."""
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self):
        """Degree of a nonzero homogeneous polynomial; None otherwise."""
        degrees = {sum(e) for e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def variables(self):
        """Indices of variables that occur."""
        return sorted({i for e in self.terms for i, a in enumerate(e) if a})

    # -- evaluation ---------------------------------------------------------
    def evaluate(self, point):
        """Value at a point given as FieldElements or raw codes."""
        m = self.ring.nvars
        if len(point) != m:
            raise DimensionMismatch(f"point has {len(point)} coordinates, ring has {m}")
        codes = []
        for a in point:
            if isinstance(a, gf.FieldElement):
                if a.field != self.ring.field:
                    raise FieldMismatch("point coordinates from another field")
                codes.append(a.value)
            else:
                codes.append(a)
        return gf.FieldElement(self.ring.field, self.eval_codes(codes))

    def eval_codes(self, codes):
        field = self.ring.field
        mul, add, power = field.mul, field.add, field.power
        total = 0
        for e, c in self.terms.items():
            v = c
            for a, k in zip(codes, e):
                if k:
                    if not a:
                        v = 0
                        break
                    v = mul(v, power(a, k))
            if v:
                total = add(total, v)
        return total

    # -- substitution / ring maps ---------------------------------------------
    def embed(self, ring, positions):
        """Image in ``ring`` where variable i goes to variable ``positions[i]``."""
        n = ring.nvars
        terms = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, a in zip(positions, e):
                f[i] = a
            terms[tuple(f)] = c
        return Polynomial(ring, terms)

    def divide_exact(self, divisor, order=GREVLEX):
        """Quotient of an exact division; raises ValueError on a remainder."""
        self.ring.check(divisor)
        if divisor.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        field = self.ring.field
        lt, lc = divisor.leading_term(order)
        lc_inv = field.inv(lc)
        rest = self
        quotient = {}
        while rest.terms:
            e, c = rest.leading_term(order)
            diff = tuple(a - b for a, b in zip(e, lt))
            if min(diff) < 0:
                raise ValueError("division is not exact")
            k = field.mul(c, lc_inv)
            quotient[diff] = k
            rest = rest - divisor.mul_monomial(diff, k)
        return Polynomial(self.ring, quotient)

    # -- text -----------------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_monomial(names, exps):
    parts = []
    for name, a in zip(names, exps):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(f, order=GREVLEX):
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for exps, c in f.sorted_terms(order):
        mono = format_monomial(f.ring.names, exps)
        coeff = gf.format_code(field, c)
        if not mono:
            out.append(coeff)
        elif c == 1:
            out.append(mono)
        elif "+" in coeff:
            out.append(f"({coeff})*{mono}")
        else:
            out.append(f"{coeff}*{mono}")
    return "+".join(out)


class _PolyAlgebra:
    def __init__(self, ring):
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}

    def const(self, n):
        return self.ring.const(n)

    def name(self, ident, pos):
        i = self.index.get(ident)
        if i is not None:
            return self.ring.var(i)
        if ident == "g":
            if self.ring.field.k == 1:
                raise ParseError("prime fields have no generator symbol 'g'", pos)
            return Polynomial(self.ring, {(0,) * self.ring.nvars: self.ring.field.gen_code})
        raise ParseError(f"unknown variable {ident!r}", pos)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, n):
        if n > MAX_EXPONENT:
            raise ParseError(f"exponent {n} exceeds {MAX_EXPONENT}")
        return a**n


def parse_polynomial(text, ring):
    return textparse.parse(text, _PolyAlgebra(ring))
