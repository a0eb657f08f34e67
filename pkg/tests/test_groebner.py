import random

import pytest
from hypothesis import given, settings, strategies as st

from _gen import forms, polys, rings
from vanideal.errors import EmptyInput, RingMismatch
from vanideal.groebner import (
    buchberger,
    collect_stats,
    groebner_basis,
    ideal_member,
    is_groebner,
    is_reduced,
    normal_form,
    reduce_basis,
)
from vanideal.ideal import Ideal, ideal_equal
from vanideal.poly import GREVLEX, LEX, elim, polynomial_ring
from vanideal.projective import projective_space_ideal


def test_normal_form_examples():
    R = polynomial_ring(7, 2)
    x1, x2 = R.gens()
    G = [x1**2 - x2]
    assert normal_form(x1**2, G) == x2
    assert normal_form(G[0], G).is_zero()
    assert normal_form(R.zero(), G).is_zero()
    with pytest.raises(RingMismatch):
        normal_form(x1, [polynomial_ring(7, 3).var(0)])


def test_divisor_choice_is_first_in_list():
    R = polynomial_ring(5, 2)
    x1, x2 = R.gens()
    f = x1 * x2
    a, b = x1 * x2 - x1, x1 * x2 - x2
    assert normal_form(f, [a, b]) == x1
    assert normal_form(f, [b, a]) == x2


def test_buchberger_examples():
    R = polynomial_ring(3, 3)
    x1, x2, x3 = R.gens()
    G = buchberger([x1**2 - x2, x1 * x2 - x3], LEX)
    assert is_groebner(G)
    assert ideal_member(x2**2 - x1 * x3, G)
    red = reduce_basis(G)
    assert x2**2 - x1 * x3 in red.generators or (x1 * x3 - x2**2) in red.generators

    assert list(buchberger([x1]).generators) == [x1]
    R2 = polynomial_ring(2, 2)
    y1, y2 = R2.gens()
    f = y1**2 * y2 - y1 * y2**2
    assert list(groebner_basis([f]).generators) == [f]
    with pytest.raises(EmptyInput):
        buchberger([R.zero()])


def test_reduce_basis_examples():
    R = polynomial_ring(5, 2)
    x1, x2 = R.gens()
    assert list(groebner_basis([x1, x1 + x2]).generators) == [x2, x1]
    G = groebner_basis([x1, x1 + x2])
    assert reduce_basis(G) is G
    assert list(groebner_basis([2 * x1]).generators) == [x1]


def test_membership_examples():
    R = polynomial_ring(4, 3)
    x1, x2, x3 = R.gens()
    G = projective_space_ideal(R).gb()
    assert ideal_member(x1 * x2**4 + x1**4 * x2, G)
    assert not ideal_member(R.one(), groebner_basis([x1]))
    assert ideal_member(R.zero(), G)


def test_ideal_equal_examples():
    R = polynomial_ring(3, 2)
    x1, x2 = R.gens()
    assert ideal_equal(Ideal(R, [x1, x2]), Ideal(R, [x2, x1 + x2]))
    assert not ideal_equal(Ideal(R, [x1]), Ideal(R, [x1**2]))


def test_zero_ideal_basis():
    R = polynomial_ring(2, 2)
    assert len(groebner_basis([R.zero()])) == 0


def test_stats_are_counted():
    R = polynomial_ring(4, 3)
    with collect_stats() as st_:
        groebner_basis(projective_space_ideal(R).gens)
    assert st_.bases == 1 and st_.spairs > 0 and st_.reduction_steps > 0
    with collect_stats() as st2:
        pass
    assert st2.spairs == 0


ORDERS = [GREVLEX, LEX, elim(1)]


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_reduced_basis_properties(data):
    R = data.draw(rings(max_vars=3))
    order = data.draw(st.sampled_from(ORDERS)) if R.nvars > 1 else GREVLEX
    gens = [data.draw(polys(R, max_degree=3, max_terms=3)) for _ in range(data.draw(st.integers(1, 3)))]
    if all(g.is_zero() for g in gens):
        return
    G = groebner_basis(gens, order)
    assert is_groebner(G)
    assert is_reduced(G)
    assert all(ideal_member(g, G) for g in gens)
    lms = [order.key(g.leading_monomial(order)) for g in G]
    assert lms == sorted(lms)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_canonical_under_permutation_and_scaling(data):
    R = data.draw(rings(max_vars=3))
    gens = [data.draw(polys(R, max_degree=3, max_terms=3)) for _ in range(3)]
    if all(g.is_zero() for g in gens):
        return
    seed = data.draw(st.integers(0, 10**6))
    r = random.Random(seed)
    shuffled = gens[:]
    r.shuffle(shuffled)
    scaled = [g.scale(r.randrange(1, R.field.q)) for g in shuffled]
    assert groebner_basis(gens).generators == groebner_basis(scaled).generators


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_normal_form_linear(data):
    R = data.draw(rings(max_vars=3))
    gens = [data.draw(polys(R, max_degree=2, max_terms=3)) for _ in range(2)]
    if all(g.is_zero() for g in gens):
        return
    G = groebner_basis(gens)
    f, g = data.draw(polys(R)), data.draw(polys(R))
    a = data.draw(st.integers(0, R.field.q - 1))
    b = data.draw(st.integers(0, R.field.q - 1))
    lhs = normal_form(f.scale(a) + g.scale(b), G)
    rhs = normal_form(f, G).scale(a) + normal_form(g, G).scale(b)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_homogeneous_input_gives_homogeneous_basis(data):
    R = data.draw(rings(max_vars=3))
    gens = [data.draw(forms(R, data.draw(st.integers(1, 3)))) for _ in range(data.draw(st.integers(1, 3)))]
    assert all(g.is_homogeneous() for g in buchberger(gens))
    assert all(g.is_homogeneous() for g in groebner_basis(gens))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_membership_of_combinations(data):
    R = data.draw(rings(max_vars=3))
    gens = [data.draw(polys(R, max_degree=2, max_terms=3)) for _ in range(2)]
    if all(g.is_zero() for g in gens):
        return
    h = R.zero()
    for g in gens:
        h = h + data.draw(polys(R, max_degree=2, max_terms=2)) * g
    assert ideal_member(h, groebner_basis(gens))
