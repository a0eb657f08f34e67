"""Ideals of S = GF(q)[x_1..x_m] and the operations built on Gröbner bases.

Intersections use an auxiliary variable t prepended at index 0 and the
``elim(1)`` order; colon ideals are intersections divided back; saturations
iterate colon ideals until the chain stabilises.
"""

from __future__ import annotations

from .errors import IterationLimit, NotHomogeneous, RingMismatch, ZeroIdeal, ZeroPolynomial
from .groebner import groebner_basis, ideal_member, normal_form
from .poly import GREVLEX, Polynomial, elim

MAX_SATURATION_ROUNDS = 64


class Ideal:
    """Generators plus lazily computed reduced Gröbner bases keyed by order."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens=()):
        gens = tuple(gens)
        for f in gens:
            if f.ring != ring:
                raise RingMismatch(f"{f.ring!r} generator in an ideal of {ring!r}")
        self.ring = ring
        self.gens = tuple(f for f in gens if not f.is_zero())
        self._gb = {}

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [ring.parse(t) for t in texts])

    def gb(self, order=GREVLEX):
        G = self._gb.get(order)
        if G is None:
            G = groebner_basis(self.gens, order) if self.gens else groebner_basis([self.ring.zero()], order)
            self._gb[order] = G
        return G

    def basis(self, order=GREVLEX):
        """Reduced Gröbner basis as a list, ascending by leading monomial."""
        return list(self.gb(order).generators)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        G = self.gb()
        return len(G) == 1 and G[0].total_degree() == 0

    @property
    def homogeneous(self):
        return all(f.is_homogeneous() for f in self.gens)

    def contains(self, f):
        self.ring.check(f)
        return ideal_member(f, self.gb())

    def contains_ideal(self, other):
        return all(self.contains(f) for f in other.gens)

    def reduce(self, f):
        return normal_form(f, self.gb())

    def equals(self, other):
        return ideal_equal(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.gens) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring!r} vs {J.ring!r}")


def maximal_ideal(ring):
    """The homogeneous maximal ideal (x_1, ..., x_m)."""
    return Ideal(ring, ring.gens())


def unit_ideal(ring):
    return Ideal(ring, [ring.one()])


def ideal_equal(A, B):
    """Equality of ideals, by comparing reduced grevlex bases termwise."""
    _same_ring(A, B)
    if A is B:
        return True
    return A.gb().generators == B.gb().generators


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def _lift(f, big):
    return f.embed(big, range(1, big.nvars))


def _drop_first(f, ring):
    return Polynomial(ring, {e[1:]: c for e, c in f.terms.items()})


def intersect(I, J):
    """I ∩ J from the t-free part of a Gröbner basis of t*I + (1-t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    big = ring.with_prepended()
    t = big.var(0)
    one_minus_t = big.one() - t
    gens = [t * _lift(f, big) for f in I.basis()]
    gens += [one_minus_t * _lift(g, big) for g in J.basis()]
    G = groebner_basis(gens, elim(1))
    kept = [_drop_first(g, ring) for g in G if all(e[0] == 0 for e in g.terms)]
    return Ideal(ring, kept)


def _colon_variable(I, i):
    """I : x_i for homogeneous I.

    With x_i moved to the last position, a grevlex basis element is
    divisible by x_i exactly when its leading monomial is, and dividing
    those elements by x_i gives a basis of the colon ideal.
    """
    ring = I.ring
    m = ring.nvars
    perm = list(range(m))
    perm[i], perm[m - 1] = perm[m - 1], perm[i]
    G = groebner_basis([f.embed(ring, perm) for f in I.gens], GREVLEX)
    last = [0] * m
    last[m - 1] = 1
    xm = Polynomial(ring, {tuple(last): 1})
    out = []
    for g in G:
        if all(e[m - 1] for e in g.terms):
            g = g.divide_exact(xm)
        out.append(g.embed(ring, perm))
    return Ideal(ring, out)


def colon_poly(I, f, method="auto"):
    """I : (f).

    ``method="intersect"`` always goes through I ∩ (f); the default uses a
    variable-by-variable shortcut when I is homogeneous and f a monomial.
    """
    I.ring.check(f)
    if f.is_zero():
        raise ZeroPolynomial("colon by the zero polynomial")
    if f.total_degree() == 0 or I.is_zero():
        return I
    if method == "auto" and len(f.terms) == 1 and I.homogeneous:
        (exps,) = f.terms
        K = I
        for i, a in enumerate(exps):
            for _ in range(a):
                K = _colon_variable(K, i)
        return K
    if method not in ("auto", "intersect"):
        raise ValueError(f"unknown colon method {method!r}")
    K = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [g.divide_exact(f) for g in K.gens])


def colon_ideal(I, J):
    """I : J as the intersection of I : (f) over the generators f of J."""
    _same_ring(I, J)
    if J.is_zero():
        raise ZeroIdeal("colon by the zero ideal")
    if J.is_unit():
        return I
    result = None
    for f in J.gens:
        part = colon_poly(I, f)
        result = part if result is None else intersect(result, part)
    return result


def _fixpoint(I, step, what):
    current = I
    for _ in range(MAX_SATURATION_ROUNDS):
        nxt = step(current)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise IterationLimit(f"{what} did not stabilise in {MAX_SATURATION_ROUNDS} rounds")


def saturate_poly(I, f):
    """I : f^∞."""
    if f.is_zero():
        raise ZeroPolynomial("saturation by the zero polynomial")
    return _fixpoint(I, lambda K: colon_poly(K, f), "saturation by a polynomial")


def saturate_ideal(I, J):
    """I : J^∞."""
    _same_ring(I, J)
    if J.is_zero():
        raise ZeroIdeal("saturation by the zero ideal")
    return _fixpoint(I, lambda K: colon_ideal(K, J), "saturation by an ideal")


def is_saturated(I):
    """I : m == I for the homogeneous maximal ideal m."""
    if not I.homogeneous:
        raise NotHomogeneous("saturatedness is defined here for homogeneous ideals")
    return ideal_equal(colon_ideal(I, maximal_ideal(I.ring)), I)


def field_equations(ring):
    q = ring.field.q
    return [x**q - x for x in ring.gens()]


def affine_field_ideal(I):
    """I + (x_i^q - x_i): the vanishing ideal of the affine GF(q)-points of V(I)."""
    return Ideal(I.ring, I.gens + tuple(field_equations(I.ring)))
