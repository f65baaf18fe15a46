"""Command-line front end: period | chi | gf | oracle | verify."""
from __future__ import annotations

import argparse
import json
import os
import sys
from math import lcm

from . import _fast
from .arrangement import (
    Arrangement,
    dedup_columns,
    e_sets_by_size,
    lcm_period,
    load_matrix,
)
from .errors import InputError, IntegrityError, QuasicharError, ResourceError
from .families import family_from_id, root_system_gf, root_system_spec
from .genfunc import (
    format_factored_gf,
    format_rational_gf,
    gf_from_quasipoly,
    quasipoly_from_gf,
    series_expand,
    simplify,
)
from .oracle import DEFAULT_ORACLE_BUDGET, count_complement
from .quasipoly import (
    QuasiPolynomial,
    characteristic_quasipolynomial,
    constituent_via_interpolation,
    format_poly,
    minimum_period,
)
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INTEGRITY = 4


def _resolve_arrangement(args) -> Arrangement:
    if bool(args.family) == bool(args.input):
        raise InputError("exactly one of --family and --input is required")
    if args.family:
        arr = family_from_id(args.family)
    else:
        arr = Arrangement(load_matrix(args.input), label=args.input)
    if getattr(args, "dedup", False):
        arr = dedup_columns(arr)
    return arr


def _root_system_of(args):
    """The RootSystemSpec behind --family, if it names a root system."""
    if not args.family or args.family.startswith("mid:"):
        return None
    name, _, rank = args.family.partition(":")
    return root_system_spec(name, int(rank))


def _configure_threads(args) -> None:
    threads = args.threads or os.environ.get("QUASICHAR_THREADS")
    if threads and _fast.HAVE_NUMBA:
        _fast.set_num_threads(int(threads))


def cmd_period(args) -> int:
    arr = _resolve_arrangement(args)
    s_max = min(arr.dim, arr.num_columns)
    ladder = e_sets_by_size(arr, s_max, budget=args.budget_subsets)
    rho = 1
    for e in ladder[s_max]:
        rho = lcm(rho, e)
    if args.json:
        print(json.dumps({
            "period": rho,
            "e_sets": {str(s): sorted(ladder[s]) for s in sorted(ladder)},
        }))
    else:
        print(f"rho_0 = {rho}")
        for s in sorted(ladder):
            body = ", ".join(str(v) for v in sorted(ladder[s]))
            print(f"  {{e(J): |J| <= {s}}} = {{{body}}}")
    return EXIT_OK


def _chi_via(path: str, args, arr: Arrangement) -> QuasiPolynomial:
    if path == "subsets":
        return characteristic_quasipolynomial(arr, budget=args.budget_subsets)
    if path == "gf":
        spec = _root_system_of(args)
        if spec is None:
            raise InputError(
                "--via gf needs a root-system family (closed-form "
                "generating function)")
        return quasipoly_from_gf(root_system_gf(spec), lcm(*spec.marks),
                                 spec.rank)
    if path == "oracle":
        rho = lcm_period(arr, budget=args.budget_subsets)
        divs = [d for d in range(1, rho + 1) if rho % d == 0]
        cons = {d: constituent_via_interpolation(
            lambda q: count_complement(arr, q, budget=args.budget_oracle),
            d, rho, arr.dim) for d in divs}
        return QuasiPolynomial(arr.dim, rho, cons)
    raise InputError(f"unknown --via path {path!r}")


def cmd_chi(args) -> int:
    arr = _resolve_arrangement(args)
    paths = [p.strip() for p in args.via.split(",") if p.strip()]
    results = [(p, _chi_via(p, args, arr)) for p in paths]
    chi = results[0][1]
    for p, other in results[1:]:
        if other.period != chi.period or other.constituents != chi.constituents:
            raise IntegrityError(
                f"paths {results[0][0]!r} and {p!r} disagree")
    mp = minimum_period(chi)
    if args.json:
        print(json.dumps({
            "m": chi.m,
            "period": chi.period,
            "minimum_period": mp,
            "constituents": {
                str(d): [str(c) for c in reversed(p.coeffs)]
                for d, p in sorted(chi.constituents.items())
            },
        }))
    else:
        print(f"period = {chi.period}")
        print(f"minimum period = {mp}")
        for d in sorted(chi.constituents):
            print(f"P_{d}(q) = {format_poly(chi.constituents[d])}")
    return EXIT_OK


def cmd_gf(args) -> int:
    arr = _resolve_arrangement(args)
    spec = _root_system_of(args)
    if spec is not None:
        gf = root_system_gf(spec)
    else:
        chi = characteristic_quasipolynomial(arr, budget=args.budget_subsets)
        gf = gf_from_quasipoly(chi)
    simplified = simplify(gf)
    coeffs = series_expand(gf, args.series_terms)
    if args.json:
        print(json.dumps({
            "numerator": list(gf.numerator.coeffs),
            "denominator": [list(f) for f in gf.denominator],
            "simplified": format_factored_gf(simplified),
            "series": coeffs,
        }))
    else:
        print(f"Phi(t) = {format_rational_gf(gf)}")
        print(f"       = {format_factored_gf(simplified)}")
        print("series: " + " ".join(str(c) for c in coeffs))
    return EXIT_OK


def cmd_oracle(args) -> int:
    arr = _resolve_arrangement(args)
    out = {}
    for q in args.q:
        out[q] = count_complement(arr, q, budget=args.budget_oracle)
    if args.json:
        print(json.dumps({str(q): v for q, v in out.items()}))
    else:
        for q, v in out.items():
            print(f"|M_{q}| = {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = run_suites(names)
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {name}"
        if not ok and detail:
            line += f"  ({detail})"
        print(line)
        failed += 0 if ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def _add_common(p: argparse.ArgumentParser, oracle_budget: bool = True):
    p.add_argument("--family", help="built-in family id, e.g. B:4 or mid:5")
    p.add_argument("--input", help="matrix file path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--budget-subsets", type=int, default=1 << 30,
                   help="max planned subset count before refusing")
    if oracle_budget:
        p.add_argument("--budget-oracle", type=int,
                       default=DEFAULT_ORACLE_BUDGET,
                       help="max q^m points for the brute-force counter")
    p.add_argument("--threads", type=int,
                   help="worker threads (default: QUASICHAR_THREADS or all)")
    p.add_argument("--dedup", action="store_true",
                   help="drop sign-duplicate columns before computing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasichar",
        description="Exact characteristic quasi-polynomials of integral "
                    "arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("period", help="lcm period and e(J)-set ladder")
    _add_common(p, oracle_budget=False)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("chi", help="characteristic quasi-polynomial")
    _add_common(p)
    p.add_argument("--via", default="subsets",
                   help="comma list of paths: subsets, gf, oracle "
                        "(multiple paths must agree)")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("gf", help="generating function Phi(t)")
    _add_common(p)
    p.add_argument("-N", "--series-terms", type=int, default=24,
                   help="number of series coefficients to print")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("oracle", help="brute-force |M_q| counts")
    _add_common(p)
    p.add_argument("-q", type=int, nargs="+", required=True,
                   help="moduli to count at")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + list(SUITES))
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure_threads(args)
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except QuasicharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
