"""Finite fields GF(p^k).

Elements are encoded as integers in ``[0, q)``: the base-p digits, least
significant first, are the coefficients of the residue polynomial in the
canonical generator ``g``.  All arithmetic on raw integers goes through a
:class:`FieldSpec`; :class:`FieldElement` is a thin value wrapper for the
public API.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import textparse
from .errors import DivisionByZero, FieldMismatch, NotPrimePower, ParseError

MAX_ORDER = 1 << 16
MAX_DEGREE = 8
_ADD_TABLE_LIMIT = 1024


def factor_prime_power(q):
    """Return ``(p, k)`` with ``q == p**k`` or raise :class:`NotPrimePower`."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    k = 0
    n = q
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, k


def _poly_rem(a, b, p):
    """Remainder of a by monic b, coefficient lists low-to-high over F_p."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]]


def _is_irreducible(modulus, p):
    k = len(modulus) - 1
    if k == 1:
        return True
    if k <= 3:
        return all(
            sum(c * pow(x, i, p) for i, c in enumerate(modulus)) % p for x in range(p)
        )
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, list(low) + [1], p)):
                return False
    return True


def _canonical_modulus(p, k):
    # product() yields (a_{k-1}, ..., a_0) in ascending lexicographic order
    for high_to_low in itertools.product(range(p), repeat=k):
        modulus = tuple(reversed(high_to_low)) + (1,)
        if _is_irreducible(modulus, p):
            return modulus
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) with a fixed monic irreducible ``modulus`` (low-to-high)."""

    p: int
    k: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.k

    def __repr__(self):
        return f"GF({self.q})"

    # -- digit helpers ----------------------------------------------------
    def digits(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits):
        v = 0
        for c in reversed(digits):
            v = v * self.p + c % self.p
        return v

    def _mul_slow(self, a, b):
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_poly_rem(prod, self.modulus, p) if k > 1 else prod)

    # -- tables -------------------------------------------------------------
    @functools.cached_property
    def _tables(self):
        q = self.q
        if q == 2:
            return (1, [1, 1], [None, 0])
        for cand in range(2, q):
            exp = [1]
            x = cand
            while x != 1:
                exp.append(x)
                x = self._mul_slow(x, cand)
            if len(exp) == q - 1:
                break
        log = [None] * q
        for i, v in enumerate(exp):
            log[v] = i
        return cand, exp + exp, log

    @property
    def primitive(self):
        """Smallest integer code of a multiplicative generator."""
        return self._tables[0]

    @property
    def exp_table(self):
        """Powers of :attr:`primitive`, doubled so indices up to 2(q-2) are valid."""
        return self._tables[1]

    @property
    def log_table(self):
        return self._tables[2]

    @functools.cached_property
    def add_table(self):
        """Dense addition table, or None when q is large or p == 2 (xor)."""
        if self.k == 1 or self.p == 2 or self.q > _ADD_TABLE_LIMIT:
            return None
        return [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]

    @functools.cached_property
    def neg_table(self):
        return [self._neg_digits(a) for a in range(self.q)]

    @functools.cached_property
    def zech_table(self):
        """``zech[n] = log(1 + w^n)`` for the primitive ``w``; -1 when the sum is 0."""
        exp, log = self.exp_table, self.log_table
        out = []
        for n in range(self.q - 1):
            s = self.add(1, exp[n])
            out.append(-1 if s == 0 else log[s])
        return out

    def _add_digits(self, a, b):
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _neg_digits(self, a):
        return self.from_digits([-x for x in self.digits(a)])

    # -- raw arithmetic on integer codes -------------------------------------
    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self.add_table
        if table is not None:
            return table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self.exp_table[log[a] + log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, n, self.p)
        return self.exp_table[(self.log_table[a] * n) % (self.q - 1)]

    def from_int(self, n):
        """Image of the integer n under Z -> F_q."""
        return n % self.p

    @property
    def gen_code(self):
        """Integer code of the canonical generator g (the class of x)."""
        return self.p if self.k > 1 else None

    # -- element-level views --------------------------------------------------
    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} element used in {self!r}")
            return value
        if isinstance(value, str):
            return parse_element(value, self)
        return FieldElement(self, self.from_int(value))

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def g(self):
        if self.k == 1:
            raise ValueError("prime fields have no generator symbol")
        return FieldElement(self, self.p)


@functools.lru_cache(maxsize=None)
def make_field(q):
    """Canonical field of order q (deterministic modulus)."""
    p, k = factor_prime_power(q)
    if k > MAX_DEGREE or q > MAX_ORDER:
        raise NotPrimePower(f"GF({q}) exceeds the supported size (q <= {MAX_ORDER}, k <= {MAX_DEGREE})")
    return FieldSpec(p, k, _canonical_modulus(p, k))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(self.field, self.field.power(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)} in {self.field!r}>"


def _check(a, b):
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field!r} and {b.field!r}")


def add(a, b):
    _check(a, b)
    return a + b


def sub(a, b):
    _check(a, b)
    return a - b


def mul(a, b):
    _check(a, b)
    return a * b


def neg(a):
    return -a


def inv(a):
    return a.inverse()


def elements(spec):
    """All q elements in integer-code order: 0, 1, then the rest."""
    return [FieldElement(spec, v) for v in range(spec.q)]


def subfield_codes(spec, order):
    """Codes of the subfield of the given order (a with a^order == a)."""
    p, l = factor_prime_power(order)
    if p != spec.p or spec.k % l:
        raise ValueError(f"GF({order}) is not a subfield of {spec!r}")
    return [a for a in range(spec.q) if spec.power(a, order) == a]


class _ElementAlgebra:
    def __init__(self, spec):
        self.spec = spec

    def const(self, n):
        return self.spec.from_int(n)

    def name(self, ident, pos):
        if ident != "g":
            raise ParseError(f"unknown symbol {ident!r}", pos)
        if self.spec.k == 1:
            raise ParseError("prime fields have no generator symbol 'g'", pos)
        return self.spec.gen_code

    def add(self, a, b):
        return self.spec.add(a, b)

    def sub(self, a, b):
        return self.spec.sub(a, b)

    def mul(self, a, b):
        return self.spec.mul(a, b)

    def neg(self, a):
        return self.spec.neg(a)

    def pow(self, a, n):
        return self.spec.power(a, n)


def parse_element(text, spec):
    return FieldElement(spec, textparse.parse(text, _ElementAlgebra(spec)))


def format_code(spec, code):
    """Canonical text of a raw element code."""
    if spec.k == 1:
        return str(code)
    parts = []
    for i, c in reversed(list(enumerate(spec.digits(code)))):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            atom = "g" if i == 1 else f"g^{i}"
            parts.append(atom if c == 1 else f"{c}*{atom}")
    return "+".join(parts) if parts else "0"


def format_element(a):
    return format_code(a.field, a.value)
