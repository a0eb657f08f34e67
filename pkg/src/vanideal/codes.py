"""Evaluation codes on projective and affine point sets.

The projective Reed-Muller-type code C_X(d) is the image of S_d under
f -> (f(P_1)/f_1(P_1), ..., f(P_n)/f_n(P_n)).  With the default
normalization f_i = x_pivot^d the denominators are 1.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
from dataclasses import dataclass

import numpy as np

from . import gf
from .errors import EmptyPointSet, EmptyVariety, VanidealError
from .hilbert import hilbert_function
from .ideal import affine_field_ideal
from .poly import GREVLEX, format_monomial, polynomial_ring
from .projective import PointSet, affine_points, vanishing_ideal_oracle

DEFAULT_MAX_SEARCH = 10**6


def max_search():
    return int(os.environ.get("VANIDEAL_MAX_SEARCH", DEFAULT_MAX_SEARCH))


class InconsistentResult(VanidealError):
    """Two independent computations of the same quantity disagree."""


def _monomial_value(spec, exps, coords):
    v = 1
    for a, k in zip(coords, exps):
        if k:
            if not a:
                return 0
            v = spec.mul(v, spec.power(a, k))
    return v


def monomials_of_degree(m, d):
    """Exponent tuples of total degree d in descending grevlex order."""
    return polynomial_ring(2, m).monomials_of_degree(d)


def evaluation_rows(spec, monomials, coords, normalizer="pivot"):
    """Rows f(P)/f_P(P) for arbitrary (not necessarily normalized) representatives.

    ``normalizer`` is ``"pivot"`` for f_P = x_pivot^d or ``"sum"`` for
    f_P = (x_1 + ... + x_m)^d; the latter must not vanish at any point.
    """
    if not monomials:
        return []
    d = sum(monomials[0])
    denoms = []
    for P in coords:
        if normalizer == "pivot":
            pivot = next(c for c in P if c)
            den = spec.power(pivot, d)
        elif normalizer == "sum":
            s = 0
            for c in P:
                s = spec.add(s, c)
            if not s:
                raise ValueError(f"coordinate sum vanishes at {tuple(P)}")
            den = spec.power(s, d)
        else:
            raise ValueError(f"unknown normalizer {normalizer!r}")
        denoms.append(spec.inv(den))
    return [
        tuple(spec.mul(_monomial_value(spec, e, P), w) for P, w in zip(coords, denoms)) for e in monomials
    ]


@dataclass(frozen=True)
class GeneratorMatrix:
    field: gf.FieldSpec
    degree: int
    monomials: tuple
    rows: tuple
    ncols: int

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    def rank(self):
        return len(row_echelon(self.field, self.rows))

    def to_csv(self, names=None):
        """One row per monomial; first column is the monomial, then field elements."""
        m = len(self.monomials[0]) if self.monomials else 0
        names = names or [f"x{i + 1}" for i in range(m)]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for e, row in zip(self.monomials, self.rows):
            writer.writerow([format_monomial(names, e)] + [gf.format_code(self.field, c) for c in row])
        return buf.getvalue()


def generator_matrix(X: PointSet, d: int, normalizer="pivot") -> GeneratorMatrix:
    if len(X) == 0:
        raise EmptyPointSet("code on an empty point set")
    if d < 1:
        raise ValueError("evaluation degree must be at least 1")
    monos = tuple(monomials_of_degree(X.nvars, d))
    rows = evaluation_rows(X.field, monos, [P.coords for P in X], normalizer)
    return GeneratorMatrix(X.field, d, monos, tuple(rows), len(X))


def row_echelon(spec, rows):
    """Nonzero rows of a reduced row echelon form, computed exactly over the field."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    out = []
    col = 0
    while work and col < ncols:
        pivot_row = next((r for r in work if r[col]), None)
        if pivot_row is None:
            col += 1
            continue
        work.remove(pivot_row)
        inv = spec.inv(pivot_row[col])
        pivot_row = [spec.mul(inv, c) for c in pivot_row]
        for coll in (work, out):
            for r in coll:
                c = r[col]
                if c:
                    f = spec.neg(c)
                    for j in range(col, ncols):
                        if pivot_row[j]:
                            r[j] = spec.add(r[j], spec.mul(f, pivot_row[j]))
        work = [r for r in work if any(r)]
        out.append(pivot_row)
        col += 1
    return [tuple(r) for r in out]


def rank(spec, rows):
    return len(row_echelon(spec, rows))


def _tables(spec):
    q = spec.q
    codes = np.arange(q)
    mul = np.array([[spec.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    if spec.k == 1:
        add = (codes[:, None] + codes[None, :]) % spec.p
    elif spec.p == 2:
        add = codes[:, None] ^ codes[None, :]
    else:
        add = np.array([[spec.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    return add, mul


def _span(add, mul, rows, ncols):
    """All codewords spanned by ``rows`` (message order: first row varies slowest)."""
    words = np.zeros((1, ncols), dtype=np.int64)
    q = mul.shape[0]
    for row in rows:
        row = np.asarray(row, dtype=np.int64)
        words = np.concatenate([add[words, mul[c][row]] for c in range(q)])
    return words


def minimum_distance(spec, rows, bound=None):
    """Minimum Hamming weight of a nonzero codeword, or None when q^k exceeds ``bound``.

    ``rows`` are taken as a basis after row reduction.
    """
    basis = row_echelon(spec, rows)
    k = len(basis)
    if k == 0:
        return None
    bound = max_search() if bound is None else bound
    q = spec.q
    if q**k > bound:
        return None
    if q * q > 1 << 22:
        raise ValueError(f"GF({q}) too large for table-driven search")
    add, mul = _tables(spec)
    ncols = len(basis[0])
    # split the basis so the inner span table stays small
    head_k = k
    while head_k > 1 and q**head_k > 1 << 16:
        head_k -= 1
    head = _span(add, mul, basis[:head_k], ncols)
    best = ncols + 1
    for tail_msg in itertools.product(range(q), repeat=k - head_k):
        offset = np.zeros(ncols, dtype=np.int64)
        for c, row in zip(tail_msg, basis[head_k:]):
            offset = add[offset, mul[c][np.asarray(row, dtype=np.int64)]]
        weights = np.count_nonzero(add[head, offset], axis=1)
        if not any(tail_msg):
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def minimum_distance_by_definition(spec, rows):
    """Reference minimum distance: loop over every message in pure Python."""
    basis = row_echelon(spec, rows)
    if not basis:
        return None
    n = len(basis[0])
    best = n + 1
    for msg in itertools.product(range(spec.q), repeat=len(basis)):
        if not any(msg):
            continue
        word = [0] * n
        for c, row in zip(msg, basis):
            if c:
                word = [spec.add(w, spec.mul(c, r)) for w, r in zip(word, row)]
        best = min(best, sum(1 for w in word if w))
    return best


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d_min: int | None
    d: int
    q: int
    m: int

    def __str__(self):
        dm = "unknown" if self.d_min is None else str(self.d_min)
        return f"n={self.n} k={self.k} d={dm}"


TSV_COLUMNS = ("n", "k", "d_min", "d", "q", "m")


def parameters_tsv(params, header=True):
    lines = ["\t".join(TSV_COLUMNS)] if header else []
    for p in params:
        lines.append(
            "\t".join(str(v) for v in (p.n, p.k, "unknown" if p.d_min is None else p.d_min, p.d, p.q, p.m))
        )
    return "\n".join(lines) + "\n"


def code_parameters(X: PointSet, d: int, normalizer="pivot", bound=None, cross_check=True) -> CodeParameters:
    """(n, k, d_min) of C_X(d); k is cross-checked against HF of I(X) at d."""
    G = generator_matrix(X, d, normalizer)
    basis = row_echelon(X.field, G.rows)
    k = len(basis)
    if cross_check:
        ring = polynomial_ring(X.field, X.nvars)
        hf = hilbert_function(vanishing_ideal_oracle(ring, X), d)
        if hf != k:
            raise InconsistentResult(f"generator matrix rank {k} differs from HF(d) = {hf}")
    dmin = minimum_distance(X.field, basis, bound)
    return CodeParameters(len(X), k, dmin, d, X.field.q, X.nvars)


@dataclass(frozen=True)
class AffineCodeParameters:
    n: int
    k: int
    nstandard: int
    L_degree: int
    q: int
    m: int

    @property
    def injective(self):
        """Evaluation is injective on the standard monomials."""
        return self.k == self.nstandard

    def __str__(self):
        return f"n={self.n} k={self.k}"


def standard_monomials(I, max_degree, order=GREVLEX):
    """Monomials of degree <= max_degree outside the leading-term ideal of I."""
    leads = [g.leading_monomial(order) for g in I.gb(order)]
    out = []
    for d in range(max_degree + 1):
        for e in I.ring.monomials_of_degree(d):
            if not any(all(a <= b for a, b in zip(lm, e)) for lm in leads):
                out.append(e)
    return out


def affine_code_parameters(I, L_degree: int) -> AffineCodeParameters:
    """Parameters of the affine variety code C(I, L) for L = standard monomials of degree <= L_degree."""
    if L_degree < 0:
        raise ValueError("L_degree must be nonnegative")
    ring = I.ring
    pts = affine_points(I)
    if not pts:
        raise EmptyVariety("V(I) has no affine GF(q)-points")
    spec = ring.field
    monos = standard_monomials(affine_field_ideal(I), L_degree)
    rows = [tuple(_monomial_value(spec, e, a) for a in pts) for e in monos]
    k = rank(spec, rows)
    return AffineCodeParameters(len(pts), k, len(monos), L_degree, spec.q, ring.nvars)
