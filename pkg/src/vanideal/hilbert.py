"""Hilbert series, Hilbert function, dimension, height and degree of S/I.

The Hilbert series of S/M for a monomial ideal M is written N(t)/(1-t)^m and
N is computed with the pivot recursion

    N(M) = N(M + (x)) + t * N(M : x)

on the variable x occurring in the most generators.  For homogeneous I,
S/I and S/LT(I) share their Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotHomogeneous, UnitIdeal
from .ideal import Ideal, colon_ideal, ideal_equal, ideal_sum
from .poly import GREVLEX, Polynomial


@dataclass(frozen=True)
class HilbertData:
    """``numerator`` is N(t) after cancelling (1-t)^(m-dim), low degree first."""

    numerator: tuple
    raw_numerator: tuple
    nvars: int
    dim: int
    degree: int

    @property
    def height(self):
        return self.nvars - self.dim

    def function(self, d):
        """dim_K (S/I)_d from the uncancelled numerator."""
        if d < 0:
            return 0
        m = self.nvars
        if m == 0:
            return self.raw_numerator[d] if d < len(self.raw_numerator) else 0
        return sum(c * comb(d - i + m - 1, m - 1) for i, c in enumerate(self.raw_numerator) if i <= d)


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _shift(a, k):
    return [0] * k + list(a) if any(a) else [0]


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _numerator(gens, memo):
    """N(t) for S/(gens), gens a minimal tuple of exponent tuples."""
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    cached = memo.get(gens)
    if cached is not None:
        return cached
    support = [frozenset(i for i, a in enumerate(g) if a) for g in gens]
    # split off generators sharing no variable with any other
    lonely = [
        i
        for i, s in enumerate(support)
        if all(not (s & t) for j, t in enumerate(support) if j != i)
    ]
    if lonely:
        result = [1]
        for i in lonely:
            result = _poly_mul(result, [1] + [0] * (sum(gens[i]) - 1) + [-1])
        rest = tuple(g for i, g in enumerate(gens) if i not in set(lonely))
        result = _poly_mul(result, _numerator(rest, memo))
    else:
        m = len(gens[0])
        counts = [sum(1 for g in gens if g[v]) for v in range(m)]
        v = max(range(m), key=lambda i: (counts[i], -i))
        unit = tuple(int(i == v) for i in range(m))
        plus = _minimalize([g for g in gens if not g[v]] + [unit])
        colon = _minimalize([tuple(a - 1 if i == v and a else a for i, a in enumerate(g)) for g in gens])
        result = _poly_add(_numerator(plus, memo), _shift(_numerator(colon, memo), 1))
    memo[gens] = result
    return result


def monomial_hilbert_series(exponents, nvars):
    """HilbertData of S/M for the monomial ideal generated by the given exponent tuples."""
    gens = _minimalize([tuple(e) for e in exponents])
    raw = _numerator(gens, {})
    if not any(raw):
        return HilbertData((0,), (0,), nvars, -1, 0)
    num = list(raw)
    cancelled = 0
    while cancelled < nvars and sum(num) == 0:
        # synthetic division by (1 - t): coefficients of N/(1-t) are prefix sums
        quotient = []
        acc = 0
        for c in num[:-1]:
            acc += c
            quotient.append(acc)
        num = quotient or [0]
        cancelled += 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertData(tuple(num), tuple(raw), nvars, nvars - cancelled, sum(num))


def leading_term_ideal(I, order=GREVLEX):
    """Monomial ideal of the leading monomials of the reduced Gröbner basis."""
    if not I.homogeneous:
        raise NotHomogeneous("leading-term ideal requested for an inhomogeneous ideal")
    ring = I.ring
    return Ideal(ring, [Polynomial(ring, {g.leading_monomial(order): 1}) for g in I.gb(order)])


def hilbert_series(M):
    """HilbertData of S/M for a monomial ideal M."""
    exps = []
    for f in M.gens:
        if len(f.terms) != 1:
            raise ValueError("hilbert_series expects a monomial ideal")
        exps.append(next(iter(f.terms)))
    return monomial_hilbert_series(exps, M.ring.nvars)


def hilbert_data(I, order=GREVLEX):
    """HilbertData of S/I for homogeneous I (via the leading-term ideal)."""
    if not I.homogeneous:
        raise NotHomogeneous("Hilbert series needs a homogeneous ideal")
    if not I.gens:
        return monomial_hilbert_series([], I.ring.nvars)
    return monomial_hilbert_series([g.leading_monomial(order) for g in I.gb(order)], I.ring.nvars)


def _proper(I):
    data = hilbert_data(I)
    if data.dim < 0:
        raise UnitIdeal("the unit ideal has no degree")
    return data


def degree_of(I):
    return _proper(I).degree


def dim_of(I):
    return _proper(I).dim


def height_of(I):
    return _proper(I).height


def hilbert_function(I, d):
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _proper(I).function(d)


def hilbert_plateau(I, limit=None):
    """Eventual constant value of HF for a one-dimensional quotient, and the first d reaching it."""
    data = _proper(I)
    if data.dim != 1:
        raise ValueError(f"plateau requested for a quotient of dimension {data.dim}")
    # HF(d) = degree once d >= deg N
    d0 = len(data.numerator) - 1
    if limit is not None and d0 > limit:
        raise ValueError(f"Hilbert function does not stabilise below degree {limit}")
    while d0 > 0 and data.function(d0 - 1) == data.degree:
        d0 -= 1
    return data.degree, d0


def count_common_zeros(X_ideal, F):
    """Number of points of V(X_ideal) that are common zeros of F.

    X_ideal must be the vanishing ideal of a finite point set.  Returns 0 when
    (X_ideal : (F)) == X_ideal and deg(S/(X_ideal + (F))) otherwise.
    """
    F = list(F)
    if not X_ideal.homogeneous or not all(f.is_homogeneous() for f in F):
        raise NotHomogeneous("count_common_zeros needs homogeneous input")
    FI = Ideal(X_ideal.ring, F)
    if FI.is_zero():
        raise ValueError("F must contain a nonzero polynomial")
    if ideal_equal(colon_ideal(X_ideal, FI), X_ideal):
        return 0
    return degree_of(ideal_sum(X_ideal, FI))
