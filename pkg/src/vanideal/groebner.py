"""Buchberger's algorithm, normal forms and reduced Gröbner bases.

The Buchberger loop itself lives in the active kernel (see
:mod:`vanideal.kernel`): normal pair strategy, smallest lcm degree first
with ties broken by list position, and the Gebauer-Möller installation of
the product and chain criteria.  This module converts between
:class:`~vanideal.poly.Polynomial` and kernel polynomials and adds
interreduction, normal forms and membership.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from . import kernel
from .errors import EmptyInput, RingMismatch
from .poly import GREVLEX, MonomialOrder, Polynomial


@dataclass
class Stats:
    bases: int = 0
    spairs: int = 0
    skipped_pairs: int = 0
    zero_reductions: int = 0
    reduction_steps: int = 0

    def as_dict(self):
        return dict(self.__dict__)


_stats = contextvars.ContextVar("vanideal_stats", default=None)


@contextlib.contextmanager
def collect_stats():
    """Count Gröbner work done inside the ``with`` block."""
    stats = Stats()
    token = _stats.set(stats)
    try:
        yield stats
    finally:
        _stats.reset(token)


class _NullStats(Stats):
    def __setattr__(self, name, value):
        pass


_NULL = _NullStats()


def _current_stats():
    s = _stats.get()
    return _NULL if s is None else s


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    reduced: bool
    ring: object

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]

    def max_degree(self):
        return max((g.total_degree() for g in self.generators), default=-1)


def _ring_of(polys):
    rings = {f.ring for f in polys}
    if len(rings) > 1:
        raise RingMismatch("polynomials from different rings")
    return rings.pop() if rings else None


def _ctx(ring, order, kernel_name=None):
    return kernel.context(ring.field, ring.nvars, order, kernel_name)


def _encode(ctx, f):
    return ctx.encode(f.terms.items())


def _decode(ctx, ring, kf):
    return Polynomial(ring, dict(ctx.decode(kf)))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _gb_kernel(ctx, polys, stats):
    basis, (spairs, skipped, zeros, steps) = ctx.groebner(polys)
    stats.spairs += spairs
    stats.skipped_pairs += skipped
    stats.zero_reductions += zeros
    stats.reduction_steps += steps
    return basis


def _interreduce(ctx, polys, order, stats):
    """Reduced basis from a Gröbner basis given as kernel polynomials."""
    items = [(ctx.lead(f), f) for f in polys if not ctx.is_zero(f)]
    items.sort(key=lambda t: order.key(t[0]))
    minimal = []
    for i, (lm, f) in enumerate(items):
        if any(_divides(l2, lm) for l2, _ in minimal):
            continue
        if any(_divides(l2, lm) and l2 != lm for l2, _ in items[i + 1 :]):
            continue
        minimal.append((lm, f))
    out = []
    for i, (lm, f) in enumerate(minimal):
        others = [g for j, (_, g) in enumerate(minimal) if j != i]
        r, steps = ctx.reduce(f, others)
        stats.reduction_steps += steps
        out.append(ctx.monic(r))
    return out


def buchberger(gens, order=GREVLEX, kernel_name=None):
    """Gröbner basis (minimal, not tail-reduced) of the ideal generated by ``gens``."""
    gens = list(gens)
    ring = _ring_of(gens)
    nonzero = [f for f in gens if not f.is_zero()]
    if not nonzero:
        raise EmptyInput("all generators are zero")
    stats = _current_stats()
    stats.bases += 1
    ctx = _ctx(ring, order, kernel_name)
    basis = _gb_kernel(ctx, [_encode(ctx, f) for f in nonzero], stats)
    return GroebnerBasis(tuple(_decode(ctx, ring, b) for b in basis), order, False, ring)


def reduce_basis(G, kernel_name=None):
    """The unique reduced Gröbner basis, sorted ascending by leading monomial."""
    if G.reduced:
        return G
    ctx = _ctx(G.ring, G.order, kernel_name)
    red = _interreduce(ctx, [_encode(ctx, g) for g in G.generators], G.order, _current_stats())
    return GroebnerBasis(tuple(_decode(ctx, G.ring, r) for r in red), G.order, True, G.ring)


def groebner_basis(gens, order=GREVLEX, kernel_name=None):
    """Reduced Gröbner basis in one call.

    The zero ideal gets an empty basis instead of :class:`EmptyInput`.
    """
    gens = list(gens)
    ring = _ring_of(gens)
    nonzero = [f for f in gens if not f.is_zero()]
    if not nonzero:
        return GroebnerBasis((), order, True, ring)
    stats = _current_stats()
    stats.bases += 1
    ctx = _ctx(ring, order, kernel_name)
    basis = _gb_kernel(ctx, [_encode(ctx, f) for f in nonzero], stats)
    red = _interreduce(ctx, basis, order, stats)
    return GroebnerBasis(tuple(_decode(ctx, ring, r) for r in red), order, True, ring)


def normal_form(f, G, order=GREVLEX, kernel_name=None):
    """Remainder of f by the list G; the first divisor in list order is used."""
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.generators
    G = list(G)
    for g in G:
        f.ring.check(g)
    if f.is_zero():
        return f
    ctx = _ctx(f.ring, order, kernel_name)
    r, steps = ctx.reduce(_encode(ctx, f), [_encode(ctx, g) for g in G])
    _current_stats().reduction_steps += steps
    return _decode(ctx, f.ring, r)


def ideal_member(f, G):
    """f lies in the ideal of the Gröbner basis G."""
    if f.is_zero():
        return True
    if not G.generators:
        return False
    return normal_form(f, G).is_zero()


def s_polynomial(f, g, order=GREVLEX):
    f.ring.check(g)
    ctx = _ctx(f.ring, order)
    return _decode(ctx, f.ring, ctx.spoly(_encode(ctx, f), _encode(ctx, g)))


def is_groebner(G):
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = list(G.generators)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not normal_form(s_polynomial(gens[i], gens[j], G.order), gens, G.order).is_zero():
                return False
    return True


def is_reduced(G):
    """Monic, and no term of any element is divisible by another's leading monomial."""
    order = G.order
    leads = [g.leading_term(order) for g in G.generators]
    if any(c != 1 for _, c in leads):
        return False
    for i, g in enumerate(G.generators):
        for j, (lm, _) in enumerate(leads):
            if i != j and any(_divides(lm, e) for e in g.terms):
                return False
    return True
