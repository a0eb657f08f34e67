import pytest
from hypothesis import given, settings, strategies as st

from _gen import forms, rings
from vanideal import gf
from vanideal.errors import (
    EmptyPointSet,
    EmptyVariety,
    NonvanishingWitnessInvalid,
    NotHomogeneous,
    SizeLimit,
)
from vanideal.hilbert import degree_of
from vanideal.ideal import Ideal, ideal_equal, is_saturated
from vanideal.poly import polynomial_ring
from vanideal.projective import (
    PointSet,
    ProjectivePoint,
    cartesian_points,
    check_theorem,
    enumerate_projective_space,
    is_empty_variety,
    nested_cartesian_family,
    nested_cartesian_ideal,
    point_ideal,
    projective_space_ideal,
    projective_space_size,
    vanishing_ideal_oracle,
    vanishing_ideal_poly,
    vanishing_ideal_saturation,
    variety_points,
)


def test_normalize_and_order():
    F = gf.make_field(5)
    P = ProjectivePoint.normalize(F, (0, 2, 4))
    assert P.coords == (0, 1, 2) and P.pivot == 1
    assert str(P) == "[0:1:2]"
    with pytest.raises(ValueError):
        ProjectivePoint.normalize(F, (0, 0, 0))
    pts = [str(P) for P in enumerate_projective_space(gf.make_field(2), 2)]
    assert pts == ["[1:0]", "[1:1]", "[0:1]"]


@pytest.mark.parametrize("q,m", [(2, 1), (2, 3), (3, 3), (4, 2), (5, 2), (2, 4)])
def test_enumeration_is_complete_and_sorted(q, m):
    X = enumerate_projective_space(gf.make_field(q), m)
    assert len(X) == projective_space_size(q, m)
    assert list(X) == sorted(X) and len(set(X)) == len(X)
    assert all(P.coords[P.pivot] == 1 for P in X)


def test_enumeration_bound():
    with pytest.raises(SizeLimit):
        enumerate_projective_space(gf.make_field(3), 4, bound=10)


def test_point_set_dedupes_scaled_representatives():
    F = gf.make_field(3)
    X = PointSet(F, 2, [(1, 2), (2, 1), (0, 2)])
    assert [P.coords for P in X] == [(1, 2), (0, 1)]


def test_point_ideal_vanishes_only_at_its_point():
    R = polynomial_ring(4, 3)
    for P in enumerate_projective_space(R.field, 3):
        I = point_ideal(R, P)
        assert [Q for Q in variety_points(I)] == [P]
        assert degree_of(I) == 1


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 3), (4, 2)])
def test_projective_space_ideal_is_vanishing_ideal_of_everything(q, m):
    R = polynomial_ring(q, m)
    X = enumerate_projective_space(R.field, m)
    assert ideal_equal(projective_space_ideal(R), vanishing_ideal_oracle(R, X))


def test_empty_variety():
    R = polynomial_ring(2, 2)
    x, y = R.gens()
    I = Ideal(R, [x * x + x * y + y * y])
    assert len(variety_points(I)) == 0
    assert is_empty_variety(I)
    with pytest.raises(EmptyVariety):
        vanishing_ideal_saturation(I)
    with pytest.raises(EmptyVariety):
        check_theorem(I)
    with pytest.raises(EmptyPointSet):
        vanishing_ideal_oracle(R, variety_points(I))
    with pytest.raises(ValueError):
        is_empty_variety(Ideal(R))


def test_inhomogeneous_input_rejected():
    R = polynomial_ring(3, 2)
    I = Ideal(R, [R.parse("x1^2+x2")])
    for fn in (variety_points, vanishing_ideal_saturation, is_empty_variety, check_theorem):
        with pytest.raises(NotHomogeneous):
            fn(I)


def test_poly_witness():
    R = polynomial_ring(3, 3)
    x, y, z = R.gens()
    I = Ideal(R, [x * y])
    # x + y + z vanishes at [1:0:2] and z at [1:0:0], so neither certifies
    for bad in (x + y + z, z):
        assert any(bad.eval_codes(P.coords) == 0 for P in variety_points(I))
        with pytest.raises(NonvanishingWitnessInvalid):
            vanishing_ideal_poly(I, bad)
    # on the line x = 0 the form y^2 + z^2 has no zeros over F3
    L = Ideal(R, [x])
    f = y * y + z * z
    assert all(f.eval_codes(P.coords) for P in variety_points(L))
    assert ideal_equal(vanishing_ideal_poly(L, f), vanishing_ideal_oracle(R, variety_points(L)))
    with pytest.raises(NotHomogeneous):
        vanishing_ideal_poly(L, y + R.one())


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_saturation_equals_oracle(data):
    ring = data.draw(rings(max_vars=3).filter(lambda r: r.nvars >= 2))
    gens = [data.draw(forms(ring, data.draw(st.integers(1, ring.field.q + 1)))) for _ in range(data.draw(st.integers(1, 2)))]
    I = Ideal(ring, gens)
    X = variety_points(I)
    if len(X) == 0:
        assert is_empty_variety(I)
        return
    S = vanishing_ideal_saturation(I)
    assert ideal_equal(S, vanishing_ideal_oracle(ring, X))
    assert is_saturated(S)
    assert variety_points(S) == X


def test_check_theorem_report():
    R = polynomial_ring(4, 3)
    X = cartesian_points(R.field, [gf.subfield_codes(R.field, 2)] * 3)
    report = check_theorem(vanishing_ideal_oracle(R, X))
    d = report.as_dict()
    assert d["npoints"] == 7 and d["q_plus_1"] == 5
    assert d["degree_bound_applies"] and d["vanishing_max_degree"] == 3
    assert d["iq_saturated"] and d["iq_equals_vanishing"] and d["saturation_equals_oracle"]


@pytest.mark.parametrize("q", [2, 4, 8, 9])
def test_nested_cartesian_family(q):
    R = polynomial_ring(q, 3)
    family = nested_cartesian_family(R)
    assert len(family) >= 1
    for sizes, I, X in family:
        assert len(X) == len(variety_points(I))
        assert variety_points(I) == X
        assert ideal_equal(vanishing_ideal_saturation(I), vanishing_ideal_oracle(R, X))


def test_nested_cartesian_rejects_bad_sizes():
    R = polynomial_ring(4, 2)
    with pytest.raises(ValueError):
        nested_cartesian_ideal(R, [4, 2])
    with pytest.raises(ValueError):
        nested_cartesian_ideal(R, [2, 8])
