"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 semantic error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from . import gf, kernel
from .codes import affine_code_parameters, code_parameters, generator_matrix, parameters_tsv
from .errors import EmptyVariety, VanidealError
from .fileformat import format_point, read_file
from .groebner import collect_stats
from .ideal import Ideal, affine_field_ideal, ideal_equal
from .poly import format_polynomial, polynomial_ring
from .projective import (
    affine_points,
    check_theorem,
    nested_cartesian_family,
    variety_points,
    vanishing_ideal_oracle,
    vanishing_ideal_poly,
    vanishing_ideal_saturation,
)


def _yes(flag):
    return "yes" if flag else "no"


def _print_basis(ideal, out):
    for g in ideal.basis():
        print(format_polynomial(g), file=out)


def _points_of(doc, name):
    """Point set named ``name``, or the variety of the ideal of that name."""
    if name in doc.points:
        return doc.pointset(name)
    return variety_points(doc.ideal(name))


def cmd_points(args, out):
    doc = read_file(args.file)
    X = variety_points(doc.ideal(args.name))
    for P in X:
        print(format_point(P), file=out)
    print(f"count: {len(X)}", file=out)


def _vanish(I, method):
    if method == "sat":
        return vanishing_ideal_saturation(I)
    if method == "oracle":
        X = variety_points(I)
        if len(X) == 0:
            raise EmptyVariety("V(I) has no GF(q)-rational points")
        return vanishing_ideal_oracle(I.ring, X)
    if method.startswith("poly="):
        return vanishing_ideal_poly(I, I.ring.parse(method[len("poly=") :]))
    raise argparse.ArgumentTypeError(f"unknown method {method!r}")


def _method(text):
    if text in ("sat", "oracle") or (text.startswith("poly=") and len(text) > 5):
        return text
    raise argparse.ArgumentTypeError("method must be sat, oracle or poly=<f>")


def cmd_vanish(args, out):
    doc = read_file(args.file)
    I = doc.ideal(args.name)
    _print_basis(_vanish(I, args.method), out)


def cmd_check(args, out):
    doc = read_file(args.file)
    report = check_theorem(doc.ideal(args.name))
    if args.json:
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True), file=out)
        return
    q1 = report.q + 1
    rel = "<" if report.degree_bound_applies else ">="
    lines = [
        f"q: {report.q}",
        f"variables: {report.nvars}",
        f"points: {report.npoints}",
        f"deg(S/I_q): {report.degree_iq}",
        f"deg(S/I(X)): {report.degree_vanishing}",
        f"height(I_q): {report.height_iq}",
        f"height(I(X)): {report.height_vanishing}",
        f"saturated: {_yes(report.iq_saturated)}",
        f"deg equal: {_yes(report.degrees_equal)}",
        f"ideals equal: {_yes(report.iq_equals_vanishing)}",
        f"saturation equals oracle: {_yes(report.saturation_equals_oracle)}",
        f"generator degree of I(X): {report.vanishing_max_degree} {rel} {q1} = q+1",
        f"degree bound applies: {_yes(report.degree_bound_applies)}",
    ]
    print("\n".join(lines), file=out)


def cmd_code(args, out):
    doc = read_file(args.file)
    X = _points_of(doc, args.name)
    degrees = args.degree or [1]
    if args.format == "csv":
        if len(degrees) != 1:
            raise argparse.ArgumentTypeError("csv output takes a single --degree")
        out.write(generator_matrix(X, degrees[0], args.normalizer).to_csv(list(doc.ring.names)))
        return
    params = [code_parameters(X, d, args.normalizer) for d in degrees]
    if args.format == "text":
        for p in params:
            print(f"d={p.d} {p}", file=out)
    else:
        out.write(parameters_tsv(params))


def cmd_affine(args, out):
    doc = read_file(args.file)
    I = doc.ideal(args.name)
    params = affine_code_parameters(I, args.degree)
    print(f"{params} standard_monomials={params.nstandard} injective={_yes(params.injective)}", file=out)
    if args.points:
        spec = doc.ring.field
        for a in affine_points(I):
            print("(" + ",".join(gf.format_code(spec, c) for c in a) + ")", file=out)
    if args.ideal:
        _print_basis(affine_field_ideal(I), out)


def _time_method(fn, repeat):
    samples = []
    result = None
    stats = None
    for _ in range(repeat):
        with collect_stats() as st:
            t0 = time.perf_counter()
            result = fn()
            samples.append(time.perf_counter() - t0)
        if stats is None:
            stats = st.as_dict()
    return result, samples, stats


def bench_ideal(I, repeat=3):
    """Time the saturation and oracle routes on I; counters come from the first run."""
    # fresh Ideal objects each run so no cached basis is reused
    sat, sat_t, sat_c = _time_method(lambda: vanishing_ideal_saturation(Ideal(I.ring, I.gens)), repeat)
    orc, orc_t, orc_c = _time_method(
        lambda: vanishing_ideal_oracle(I.ring, variety_points(Ideal(I.ring, I.gens))), repeat
    )
    return {
        "kernel": kernel.current(),
        "points": len(variety_points(I)),
        "equal": ideal_equal(sat, orc),
        "sat": {"samples": sat_t, "median": statistics.median(sat_t), **sat_c},
        "oracle": {"samples": orc_t, "median": statistics.median(orc_t), **orc_c},
    }


_COLUMNS = ("bases", "spairs", "skipped_pairs", "zero_reductions", "reduction_steps")


def _bench_rows(label, res):
    rows = []
    for method in ("sat", "oracle"):
        r = res[method]
        counters = "\t".join(str(r[c]) for c in _COLUMNS)
        rows.append(f"{label}\t{res['points']}\t{method}\t{len(r['samples'])}\t{r['median']:.6f}\t{counters}")
    return rows


def cmd_bench(args, out):
    if args.family:
        if args.family != "nested-cartesian":
            raise argparse.ArgumentTypeError(f"unknown family {args.family!r}")
        ring = polynomial_ring(args.q, args.m)
        runs = [("x".join(map(str, sizes)), bench_ideal(I, args.repeat)) for sizes, I, _ in nested_cartesian_family(ring)]
    else:
        if not args.file or not args.name:
            raise argparse.ArgumentTypeError("bench needs FILE NAME or --family")
        doc = read_file(args.file)
        runs = [(args.name, bench_ideal(doc.ideal(args.name), args.repeat))]
    if args.json:
        print(json.dumps({label: res for label, res in runs}, indent=2, sort_keys=True), file=out)
        return
    print("\t".join(("input", "points", "method", "runs", "median_s") + _COLUMNS), file=out)
    for label, res in runs:
        for row in _bench_rows(label, res):
            print(row, file=out)
    print(f"kernel: {kernel.current()}", file=out)
    for label, res in runs:
        faster = res["sat"]["median"] < res["oracle"]["median"]
        print(f"{label}: results equal: {_yes(res['equal'])}; sat faster: {_yes(faster)}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(prog="vanideal", description="Vanishing ideals of finite sets of projective points.")
    parser.add_argument("--kernel", choices=["python", "cython"], help="reduction kernel (default: compiled if built)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="list V(I) in projective space")
    p.add_argument("file")
    p.add_argument("name")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("vanish", help="reduced Gröbner basis of I(V(I))")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--method", type=_method, default="sat", help="sat, oracle or poly=<f>")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("check", help="compare I + I(P^{m-1}) with I(V(I))")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("code", help="parameters of the evaluation code on a point set or variety")
    p.add_argument("file")
    p.add_argument("name", help="points block or ideal")
    p.add_argument("--degree", type=int, action="append", help="evaluation degree (repeatable)")
    p.add_argument("--format", choices=["tsv", "csv", "text"], default="tsv")
    p.add_argument("--normalizer", choices=["pivot", "sum"], default="pivot")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("bench", help="time saturation against the point oracle")
    p.add_argument("file", nargs="?")
    p.add_argument("name", nargs="?")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--family", help="built-in input family instead of a file: nested-cartesian")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("affine", help="affine variety code C(I, L)")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--degree", type=int, default=1, help="L = standard monomials of degree <= this")
    p.add_argument("--points", action="store_true", help="also list the affine points")
    p.add_argument("--ideal", action="store_true", help="also print I + (x_i^q - x_i)")
    p.set_defaults(func=cmd_affine)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.kernel:
            kernel.use(args.kernel)
        if getattr(args, "repeat", 1) < 1:
            raise argparse.ArgumentTypeError("--repeat must be positive")
        args.func(args, out)
    except VanidealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ImportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
