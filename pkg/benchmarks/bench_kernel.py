"""Compare the compiled and pure-Python reduction kernels.

Each workload runs under both kernels; the Gröbner counters must agree
exactly (same algorithm, same pair order) and the timings are reported as
medians.

    python benchmarks/bench_kernel.py --repeat 5
"""

import argparse
import statistics
import sys
import time

from vanideal import kernel
from vanideal.groebner import collect_stats
from vanideal.ideal import Ideal
from vanideal.poly import polynomial_ring
from vanideal.projective import (
    nested_cartesian_family,
    vanishing_ideal_oracle,
    vanishing_ideal_poly,
    vanishing_ideal_saturation,
    variety_points,
)


def _rnc_ring():
    R = polynomial_ring(9, [f"x{i}" for i in range(6)])
    xs = R.gens()
    minors = [xs[i] * xs[j + 1] - xs[j] * xs[i + 1] for i in range(5) for j in range(i + 1, 5)]
    return R, minors


def workloads(include_slow):
    R4 = polynomial_ring(4, 3)
    for sizes, I, _ in nested_cartesian_family(R4):
        label = "x".join(map(str, sizes))
        yield f"cartesian {label} sat", lambda I=I: vanishing_ideal_saturation(Ideal(I.ring, I.gens))
        yield f"cartesian {label} oracle", lambda I=I: vanishing_ideal_oracle(I.ring, variety_points(I))
    R9 = polynomial_ring(9, 3)
    for sizes, I, _ in nested_cartesian_family(R9)[:2]:
        label = "x".join(map(str, sizes))
        yield f"cartesian q=9 {label} sat", lambda I=I: vanishing_ideal_saturation(Ideal(I.ring, I.gens))
    R, minors = _rnc_ring()
    yield "normal curve P^5 sat", lambda: vanishing_ideal_saturation(Ideal(R, minors))
    if include_slow:
        f = R.parse("x0-x4-x5")
        yield "normal curve P^5 poly", lambda: vanishing_ideal_poly(Ideal(R, minors), f)


def run(fn, name, repeat):
    previous = kernel.use(name)
    try:
        samples = []
        counters = None
        for _ in range(repeat):
            with collect_stats() as st:
                t0 = time.perf_counter()
                fn()
                samples.append(time.perf_counter() - t0)
            counters = counters or st.as_dict()
        return statistics.median(samples), counters
    finally:
        kernel.use(previous)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--slow", action="store_true", help="include the single-polynomial saturation")
    args = ap.parse_args(argv)
    if "cython" not in kernel.available():
        print("compiled kernel not built; run `python setup.py build_ext --inplace`", file=sys.stderr)
        return 1
    print(f"{'workload':34s} {'python_s':>10s} {'cython_s':>10s} {'speedup':>8s}  counters")
    mismatches = 0
    for label, fn in workloads(args.slow):
        tp, cp = run(fn, "python", args.repeat)
        tc, cc = run(fn, "cython", args.repeat)
        same = "equal" if cp == cc else "DIFFER"
        mismatches += cp != cc
        print(f"{label:34s} {tp:10.4f} {tc:10.4f} {tp / tc:8.2f}  {same}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
