import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from _gen import polys, rings
from vanideal import kernel
from vanideal.groebner import collect_stats, groebner_basis, normal_form
from vanideal.ideal import Ideal
from vanideal.poly import GREVLEX, LEX, elim, polynomial_ring
from vanideal.projective import nested_cartesian_family, vanishing_ideal_saturation

needs_ext = pytest.mark.skipif("cython" not in kernel.available(), reason="compiled kernel not built")


def run_both(fn):
    out = {}
    for name in ("python", "cython"):
        previous = kernel.use(name)
        try:
            with collect_stats() as st_:
                result = fn()
            out[name] = (result, st_.as_dict())
        finally:
            kernel.use(previous)
    return out


def test_python_kernel_always_available():
    assert "python" in kernel.available()
    assert kernel.get("python").NAME == "python"
    with pytest.raises(ValueError):
        kernel.get("fortran")


def test_use_returns_previous():
    before = kernel.current()
    assert kernel.use("python") == before
    assert kernel.current() == "python"
    kernel.use(before)
    assert kernel.current() == before


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([GREVLEX, LEX, elim(1)]))
def test_groebner_parity(data, order):
    ring = data.draw(rings(qs=st.sampled_from([2, 3, 4, 5, 9]), max_vars=3))
    gens = [data.draw(polys(ring, 3, 4)) for _ in range(data.draw(st.integers(1, 3)))]
    res = run_both(lambda: groebner_basis(gens, order))
    (gp, sp), (gc, sc) = res["python"], res["cython"]
    assert [str(g) for g in gp] == [str(g) for g in gc]
    assert sp == sc


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.data())
def test_normal_form_parity(data):
    ring = data.draw(rings(max_vars=3))
    G = [g for g in (data.draw(polys(ring, 2, 3)) for _ in range(3)) if not g.is_zero()]
    f = data.draw(polys(ring, 4, 6))
    res = run_both(lambda: normal_form(f, G))
    assert res["python"][0] == res["cython"][0]


@needs_ext
def test_saturation_parity_on_family():
    R = polynomial_ring(4, 3)
    for _, I, _ in nested_cartesian_family(R):
        res = run_both(lambda: vanishing_ideal_saturation(Ideal(R, I.gens)))
        assert [str(g) for g in res["python"][0].basis()] == [str(g) for g in res["cython"][0].basis()]
        assert res["python"][1] == res["cython"][1]


def _kernel_in_subprocess(value):
    env = dict(os.environ, VANIDEAL_KERNEL=value)
    return subprocess.run(
        [sys.executable, "-c", "from vanideal import kernel; print(kernel.current())"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_environment_forces_fallback():
    proc = _kernel_in_subprocess("python")
    assert proc.returncode == 0 and proc.stdout.strip() == "python"


@needs_ext
def test_environment_selects_extension():
    proc = _kernel_in_subprocess("cython")
    assert proc.returncode == 0 and proc.stdout.strip() == "cython"
    assert _kernel_in_subprocess("auto").stdout.strip() == "cython"
