"""Small worked examples with known answers."""

import io
import random

import pytest

from vanideal import cli
from vanideal.codes import affine_code_parameters
from vanideal.hilbert import count_common_zeros, degree_of
from vanideal.ideal import Ideal, colon_poly, ideal_equal, intersect, maximal_ideal, saturate_ideal
from vanideal.poly import polynomial_ring
from vanideal.projective import (
    enumerate_projective_space,
    is_empty_variety,
    point_ideal,
    projective_space_ideal,
    projective_space_size,
    vanishing_ideal_oracle,
    vanishing_ideal_poly,
    variety_points,
)


def test_projective_line_over_f2_by_intersection():
    R = polynomial_ring(2, 2)
    X = enumerate_projective_space(R.field, 2)
    assert ideal_equal(vanishing_ideal_oracle(R, X), Ideal(R, [R.parse("x1^2*x2-x1*x2^2")]))


def test_oracle_does_not_depend_on_fold_order():
    R = polynomial_ring(3, 3)
    r = random.Random(1)
    X = r.sample(list(enumerate_projective_space(R.field, 3)), 6)
    for _ in range(3):
        r.shuffle(X)
        folded = point_ideal(R, X[0])
        for P in X[1:]:
            folded = intersect(folded, point_ideal(R, P))
        assert ideal_equal(folded, vanishing_ideal_oracle(R, sorted(X)))


def test_saturating_a_monomial_ideal():
    R = polynomial_ring(2, 2)
    I = Ideal(R, [R.parse("x1^2*x2"), R.parse("x1*x2^2")])
    assert ideal_equal(saturate_ideal(I, maximal_ideal(R)), Ideal(R, [R.parse("x1*x2")]))


@pytest.mark.parametrize("q,m,n", [(2, 3, 7), (4, 3, 21), (9, 2, 10)])
def test_projective_space_sizes(q, m, n):
    assert projective_space_size(q, m) == n


def test_emptiness_examples():
    R = polynomial_ring(3, 3)
    assert is_empty_variety(maximal_ideal(R))
    assert not is_empty_variety(Ideal(R, [R.var(0)]))


def test_linear_form_zero_count_on_the_plane():
    R = polynomial_ring(2, 3)
    IP = projective_space_ideal(R)
    X = enumerate_projective_space(R.field, 3)
    for text in ("x1", "x1+x2", "x1+x2+x3", "x2+x3"):
        f = R.parse(text)
        direct = sum(1 for P in X if f.eval_codes(P.coords) == 0)
        assert direct == 3
        assert count_common_zeros(IP, [f]) == direct


def test_linear_witness_on_two_points():
    R = polynomial_ring(3, 2)
    x, y = R.gens()
    I = Ideal(R, [x * y])  # {[1:0], [0:1]}
    X = variety_points(I)
    assert len(X) == 2
    witnesses = [
        a * x + b * y
        for a in (R.const(c) for c in range(3))
        for b in (R.const(c) for c in range(3))
        if not (a * x + b * y).is_zero()
    ]
    good = [f for f in witnesses if all(f.eval_codes(P.coords) for P in X)]
    assert good
    for f in good:
        assert ideal_equal(vanishing_ideal_poly(I, f), vanishing_ideal_oracle(R, X))


def test_twisted_cubic_and_quadric_point_counts():
    R = polynomial_ring(3, 4)
    x0, x1, x2, x3 = R.gens()
    cubic = Ideal(R, [x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2])
    quadric = Ideal(R, [x0 * x3 - x1 * x2])
    for I, n in ((cubic, 4), (quadric, 16)):
        assert len(variety_points(I)) == n
        assert degree_of(I + projective_space_ideal(R)) == n


def test_normal_curve_colon_by_witness():
    R = polynomial_ring(9, [f"x{i}" for i in range(6)])
    xs = R.gens()
    I = Ideal(R, [xs[i] * xs[j + 1] - xs[j] * xs[i + 1] for i in range(5) for j in range(i + 1, 5)])
    X = variety_points(I)
    assert len(X) == 10
    O = vanishing_ideal_oracle(R, X)
    assert ideal_equal(colon_poly(O, R.parse("x0-x4-x5")), O)


def test_affine_examples():
    R1 = polynomial_ring(2, 1)
    p = affine_code_parameters(Ideal(R1), 1)
    assert (p.n, p.k) == (2, 2)
    R2 = polynomial_ring(2, 2)
    p = affine_code_parameters(Ideal(R2, [R2.parse("x1+x2")]), 1)
    assert (p.n, p.k) == (2, 2) and p.k <= p.n


def _cli(tmp_path, text, *argv):
    path = tmp_path / "in.ideal"
    path.write_text(text)
    buf = io.StringIO()
    code = cli.main([argv[0], str(path), *argv[1:]], out=buf)
    return code, buf.getvalue()


def test_points_of_whole_plane_and_of_m(tmp_path):
    text = (
        "field 2\nvars x y z\n"
        "ideal P\nx^2*y+x*y^2\nx^2*z+x*z^2\ny^2*z+y*z^2\nend\n"
        "ideal M\nx\ny\nz\nend\n"
    )
    code, out = _cli(tmp_path, text, "points", "P")
    assert code == 0 and out.splitlines()[-1] == "count: 7"
    code, out = _cli(tmp_path, text, "points", "M")
    assert code == 0 and out.splitlines() == ["count: 0"]
    code, _ = _cli(tmp_path, text, "code", "M", "--degree", "1")
    assert code == 3
