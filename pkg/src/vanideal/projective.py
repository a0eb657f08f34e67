"""Rational points of projective space and vanishing ideals of point sets.

Two independent routes to I(X) for X = V(I) in P^{m-1}(GF(q)):

* ``vanishing_ideal_oracle``: intersect the prime ideals of the points of X,
  found by enumerating P^{m-1}(GF(q));
* ``vanishing_ideal_saturation``: (I + I(P^{m-1})) : m^∞.

Affine points of V(I) in GF(q)^m and their ideals live here too.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass, field

from . import gf
from .errors import (
    DimensionMismatch,
    EmptyPointSet,
    EmptyVariety,
    NonvanishingWitnessInvalid,
    NotHomogeneous,
    SizeLimit,
)
from .hilbert import degree_of, height_of
from .ideal import (
    Ideal,
    colon_ideal,
    colon_poly,
    ideal_equal,
    ideal_sum,
    intersect,
    is_saturated,
    maximal_ideal,
    saturate_ideal,
    saturate_poly,
)

DEFAULT_MAX_POINTS = 10**6


def max_points():
    return int(os.environ.get("VANIDEAL_MAX_POINTS", DEFAULT_MAX_POINTS))


@functools.total_ordering
@dataclass(frozen=True)
class ProjectivePoint:
    """Representative with first nonzero coordinate 1; ``coords`` are raw field codes.

    Points sort by pivot position, then by coordinate codes.
    """

    coords: tuple
    field: gf.FieldSpec = field(compare=False)

    def sort_key(self):
        return (self.pivot, self.coords)

    def __lt__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @classmethod
    def normalize(cls, spec, coords):
        codes = [c.value if isinstance(c, gf.FieldElement) else int(c) for c in coords]
        pivot = next((i for i, c in enumerate(codes) if c), None)
        if pivot is None:
            raise ValueError("the zero vector is not a projective point")
        inv = spec.inv(codes[pivot])
        return cls(tuple(spec.mul(inv, c) for c in codes), spec)

    @property
    def pivot(self):
        return next(i for i, c in enumerate(self.coords) if c)

    @property
    def elements(self):
        return [gf.FieldElement(self.field, c) for c in self.coords]

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "[" + ":".join(gf.format_code(self.field, c) for c in self.coords) + "]"


class PointSet:
    """Sorted, duplicate-free tuple of projective points in P^{m-1}(GF(q))."""

    __slots__ = ("field", "nvars", "points")

    def __init__(self, spec, nvars, points):
        pts = set()
        for P in points:
            if not isinstance(P, ProjectivePoint):
                P = ProjectivePoint.normalize(spec, P)
            if len(P) != nvars:
                raise DimensionMismatch(f"point {P} has {len(P)} coordinates, expected {nvars}")
            pts.add(P)
        self.field = spec
        self.nvars = nvars
        self.points = tuple(sorted(pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.points == other.points
        )

    def __repr__(self):
        return f"PointSet({len(self)} points in P^{self.nvars - 1}(GF({self.field.q})))"


def projective_space_size(q, m):
    return (q**m - 1) // (q - 1)


def _check_size(n, bound):
    bound = max_points() if bound is None else bound
    if n > bound:
        raise SizeLimit(f"{n} points exceed the enumeration bound {bound}")


def enumerate_projective_space(spec, m, bound=None):
    """All (q^m - 1)/(q - 1) normalized points of P^{m-1}(GF(q)), sorted."""
    if m < 1:
        raise ValueError("need at least one coordinate")
    q = spec.q
    _check_size(projective_space_size(q, m), bound)
    pts = []
    for pivot in range(m):
        head = (0,) * pivot + (1,)
        for tail in itertools.product(range(q), repeat=m - pivot - 1):
            pts.append(ProjectivePoint(head + tail, spec))
    ps = PointSet.__new__(PointSet)
    ps.field, ps.nvars, ps.points = spec, m, tuple(pts)
    return ps


def cartesian_points(spec, factors):
    """Projective image [A_1 x ... x A_m] of a product of coordinate sets (codes)."""
    m = len(factors)
    pts = set()
    for coords in itertools.product(*factors):
        if any(coords):
            pts.add(ProjectivePoint.normalize(spec, coords))
    return PointSet(spec, m, pts)


def affine_points(I, bound=None):
    """Points of GF(q)^m (code tuples, lexicographic) where every generator of I vanishes."""
    ring = I.ring
    q, m = ring.field.q, ring.nvars
    _check_size(q**m, bound)
    gens = list(I.gens)
    return [a for a in itertools.product(range(q), repeat=m) if all(f.eval_codes(a) == 0 for f in gens)]


def affine_point_ideal(ring, a):
    """Maximal ideal (x_1 - a_1, ..., x_m - a_m) of an affine point."""
    if len(a) != ring.nvars:
        raise DimensionMismatch("point and ring dimensions differ")
    return Ideal(ring, [x - ring.const(ring.field.element(c)) for x, c in zip(ring.gens(), a)])


def affine_vanishing_oracle(ring, points):
    """Intersection of the affine point ideals, folded left in the given order."""
    points = list(points)
    if not points:
        raise EmptyPointSet("vanishing ideal of an empty point set")
    result = None
    for a in points:
        PI = affine_point_ideal(ring, a)
        result = PI if result is None else intersect(result, PI)
    return Ideal(ring, result.basis())


def nested_cartesian_ideal(ring, sizes):
    """Binomial ideal of [A_1 x ... x A_m] for subfields |A_1| <= ... <= |A_m|.

    Generated by x_i x_j^{d_j} - x_i^{d_j} x_j for i < j, d_j = |A_j|.
    """
    sizes = list(sizes)
    if len(sizes) != ring.nvars:
        raise DimensionMismatch("one subfield size per variable")
    if sorted(sizes) != sizes:
        raise ValueError("subfield sizes must be nondecreasing")
    for d in sizes:
        gf.subfield_codes(ring.field, d)
    xs = ring.gens()
    m = ring.nvars
    return Ideal(
        ring,
        [xs[i] * xs[j] ** sizes[j] - xs[i] ** sizes[j] * xs[j] for i in range(m) for j in range(i + 1, m)],
    )


def subfield_orders(spec):
    return [spec.p**l for l in range(1, spec.k + 1) if spec.k % l == 0]


def nested_cartesian_family(ring):
    """(sizes, ideal, points) for every nondecreasing vector of subfield orders."""
    spec = ring.field
    out = []
    for sizes in itertools.combinations_with_replacement(subfield_orders(spec), ring.nvars):
        X = cartesian_points(spec, [gf.subfield_codes(spec, d) for d in sizes])
        out.append((sizes, nested_cartesian_ideal(ring, sizes), X))
    return out


def point_ideal(ring, P):
    """Prime ideal of P: x_i - a_i x_k for i != k, with k the pivot (a_k = 1)."""
    if len(P) != ring.nvars:
        raise DimensionMismatch("point and ring dimensions differ")
    if not isinstance(P, ProjectivePoint):
        P = ProjectivePoint.normalize(ring.field, P)
    k = P.pivot
    xk = ring.var(k)
    gens = [ring.var(i) - xk.scale(a) for i, a in enumerate(P.coords) if i != k]
    return Ideal(ring, gens)


def projective_space_ideal(ring):
    """I(P^{m-1}) = (x_i^q x_j - x_i x_j^q : i < j)."""
    m = ring.nvars
    if m < 2:
        raise ValueError("I(P^{m-1}) is defined here for m >= 2")
    q = ring.field.q
    xs = ring.gens()
    return Ideal(ring, [xs[i] ** q * xs[j] - xs[i] * xs[j] ** q for i in range(m) for j in range(i + 1, m)])


def _require_homogeneous(I):
    if not I.homogeneous:
        raise NotHomogeneous("ideal is not homogeneous")


def variety_points(I, bound=None):
    """Points of P^{m-1}(GF(q)) at which every generator vanishes."""
    _require_homogeneous(I)
    ring = I.ring
    space = enumerate_projective_space(ring.field, ring.nvars, bound)
    gens = list(I.gens)
    pts = [P for P in space if all(f.eval_codes(P.coords) == 0 for f in gens)]
    ps = PointSet.__new__(PointSet)
    ps.field, ps.nvars, ps.points = ring.field, ring.nvars, tuple(pts)
    return ps


def is_empty_variety(I):
    """V(I) is empty iff I(P^{m-1}) : I == I(P^{m-1})."""
    _require_homogeneous(I)
    if I.is_zero():
        raise ValueError("colon by the zero ideal is undefined")
    IP = projective_space_ideal(I.ring)
    return ideal_equal(colon_ideal(IP, I), IP)


def vanishing_ideal_oracle(ring, X):
    """Intersection of the point ideals of X, left fold in sorted point order."""
    if len(X) == 0:
        raise EmptyPointSet("vanishing ideal of an empty point set")
    result = None
    for P in X:
        PI = point_ideal(ring, P)
        result = PI if result is None else intersect(result, PI)
    return Ideal(ring, result.basis())


def vanishing_ideal_saturation(I):
    """(I + I(P^{m-1})) : m^∞, the vanishing ideal of V(I)."""
    _require_homogeneous(I)
    Iq = ideal_sum(I, projective_space_ideal(I.ring))
    result = saturate_ideal(Iq, maximal_ideal(I.ring))
    # I(empty set) is the whole ring
    if result.is_unit():
        raise EmptyVariety("V(I) has no GF(q)-rational points")
    return result


def vanishing_ideal_poly(I, f):
    """(I + I(P^{m-1})) : f^∞, certified against the m-saturation.

    Raises :class:`NonvanishingWitnessInvalid` when f vanishes on a point of V(I).
    """
    _require_homogeneous(I)
    I.ring.check(f)
    if f.is_zero() or not f.is_homogeneous():
        raise NotHomogeneous("the witness must be a nonzero homogeneous polynomial")
    reference = vanishing_ideal_saturation(I)
    Iq = ideal_sum(I, projective_space_ideal(I.ring))
    result = saturate_poly(Iq, f)
    if not (ideal_equal(colon_poly(result, f), result) and ideal_equal(result, reference)):
        raise NonvanishingWitnessInvalid("the witness vanishes at a point of V(I)")
    return result


@dataclass
class TheoremReport:
    q: int
    nvars: int
    npoints: int
    degree_iq: int
    height_iq: int
    degree_vanishing: int
    height_vanishing: int
    iq_saturated: bool
    iq_equals_vanishing: bool
    saturation_equals_oracle: bool
    vanishing_max_degree: int
    vanishing_gb_max_degree: int
    vanishing_basis: list = field(default_factory=list)

    @property
    def degrees_equal(self):
        return self.degree_iq == self.degree_vanishing

    @property
    def degree_bound_applies(self):
        """All minimal generators of I(X) have degree below q + 1."""
        return self.vanishing_max_degree < self.q + 1

    def as_dict(self):
        d = dict(self.__dict__)
        d["degrees_equal"] = self.degrees_equal
        d["degree_bound_applies"] = self.degree_bound_applies
        d["q_plus_1"] = self.q + 1
        return d


def check_theorem(I, bound=None):
    """Compare the saturation route with the point-intersection oracle on V(I)."""
    _require_homogeneous(I)
    ring = I.ring
    X = variety_points(I, bound)
    if len(X) == 0:
        raise EmptyVariety("V(I) has no GF(q)-rational points")
    Iq = ideal_sum(I, projective_space_ideal(ring))
    sat = vanishing_ideal_saturation(I)
    oracle = vanishing_ideal_oracle(ring, X)
    basis = oracle.basis()
    return TheoremReport(
        q=ring.field.q,
        nvars=ring.nvars,
        npoints=len(X),
        degree_iq=degree_of(Iq),
        height_iq=height_of(Iq),
        degree_vanishing=degree_of(oracle),
        height_vanishing=height_of(oracle),
        iq_saturated=is_saturated(Iq),
        iq_equals_vanishing=ideal_equal(Iq, oracle),
        saturation_equals_oracle=ideal_equal(sat, oracle),
        vanishing_max_degree=_minimal_generator_degree(oracle),
        vanishing_gb_max_degree=max(g.total_degree() for g in basis),
        vanishing_basis=[str(g) for g in basis],
    )


def _minimal_generator_degree(I):
    """Largest degree in a minimal homogeneous generating set of I."""
    gens = sorted(I.basis(), key=lambda f: f.total_degree())
    top = 0
    kept = []
    for g in gens:
        if kept and Ideal(I.ring, kept).contains(g):
            continue
        kept.append(g)
        top = max(top, g.total_degree())
    return top
