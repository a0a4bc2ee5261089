"""Command-line interface.

Exit codes: 0 success, 2 usage/precondition error, 3 enumeration cap exceeded,
4 undefined result, 5 Monte Carlo check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .asymptotics import (
    TraceVariableSpec,
    UndefinedCorrelation,
    correlation_limit,
    degree_formula,
    leading_general,
    numeric_semicircle_quadrature,
    semicircle_moment,
    subleading_multi,
)
from .chords import EnumerationCapExceeded, EnumerationConfig, eta_table
from .mc import cross_check
from .moments import DEFAULT_CACHE, IndexMultiset, moment_by_enumeration, moment_by_recursion

EXIT_USAGE, EXIT_CAP, EXIT_UNDEFINED, EXIT_MC_FAIL = 2, 3, 4, 5


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        out = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(k < 0 for k in out):
        raise argparse.ArgumentTypeError("entries must be nonnegative")
    return out


def fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",")] if text.strip() else []
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def envelope(command: str, inputs: dict, result: dict) -> str:
    doc = {"command": command, "inputs": inputs, "result": result, "version": __version__}
    return json.dumps(doc, indent=2, sort_keys=True)


def _csv(rows, header: Sequence[str] | None) -> str:
    lines = [",".join(header)] if header else []
    lines += [",".join(str(x) for x in row) for row in rows]
    return "\n".join(lines)


def cmd_moment(args) -> int:
    if not args.ks:
        raise ValueError("--ks needs at least one exponent")
    ks = IndexMultiset.of(args.ks)
    if args.method == "enumeration":
        config = EnumerationConfig.from_env(cap_points=args.cap)
        poly = moment_by_enumeration(ks, config)
    else:
        poly = moment_by_recursion(ks)
    shown = poly if args.gamma_form else poly.set_gamma_one()
    value = None if args.eval is None else poly.set_gamma_one()(args.eval)
    if args.cache_stats:
        print(f"moment cache entries: {len(DEFAULT_CACHE)}", file=sys.stderr)

    if args.format == "json":
        result = {"polynomial": str(shown), "terms": poly.to_json(), "gamma_form": args.gamma_form}
        if value is not None:
            result["value"] = str(value)
        print(envelope("moment", {"ks": list(ks.ks), "eval": args.eval, "method": args.method}, result))
    elif args.format == "csv":
        if args.gamma_form:
            rows = [(ge, ve, c) for ge, ve, c in poly.sorted_terms()]
            header = ("g", "v", "c")
        else:
            uni = poly.set_gamma_one()
            rows = [(e, uni.coeff(e)) for e in sorted(uni.coeffs, reverse=True)]
            header = ("v", "c")
        print(_csv(rows, header if args.header else None))
    else:
        print(shown)
        if value is not None:
            print(f"N={args.eval}: {value}")
    return 0


def cmd_eta(args) -> int:
    ks = [k for k in args.ks if k]
    config = EnumerationConfig.from_env(cap_points=args.cap)
    table = eta_table(ks, config)
    rows = table.rows()
    if args.format == "json":
        result = {
            "rows": [{"g": g, "b": b, "count": str(c)} for g, b, c in rows],
            "total": str(table.total()),
        }
        print(envelope("eta", {"ks": args.ks, "cap": args.cap}, result))
    else:
        out = _csv(rows + [("total", "", table.total())], ("g", "b", "count") if args.header else None)
        print(out)
    return 0


def cmd_asympt(args) -> int:
    evens, odds = args.evens, args.odds
    if args.which == "leading":
        if len(odds) % 2:
            raise ValueError("an odd number of odd traces gives the zero polynomial")
        value = leading_general(evens, odds)
    elif args.which == "subleading":
        if odds:
            raise ValueError("subleading coefficients are defined for even traces only")
        value = subleading_multi(evens)
    else:
        value = degree_formula([2 * i for i in evens] + [2 * j + 1 for j in odds])
    if args.format == "json":
        inputs = {"evens": evens, "odds": odds, "which": args.which}
        print(envelope("asympt", inputs, {"value": str(value)}))
    else:
        print(value)
    return 0


def cmd_corr_limit(args) -> int:
    f = TraceVariableSpec(tuple(args.f_evens), tuple(args.f_odds))
    g = TraceVariableSpec(tuple(args.g_evens), tuple(args.g_odds))
    lim = correlation_limit(f, g)
    if args.format == "json":
        inputs = {"f_evens": args.f_evens, "f_odds": args.f_odds, "g_evens": args.g_evens, "g_odds": args.g_odds}
        result = {
            "case": lim.case,
            "exact": str(lim.value),
            "square": str(lim.value.square),
            "sign": lim.value.sign,
            "float": float(lim),
        }
        print(envelope("corr-limit", inputs, result))
    else:
        print(f"{lim.value}\t{float(lim)!r}\tcase {lim.case}")
    return 0


def cmd_mc_check(args) -> int:
    workers = EnumerationConfig.from_env().workers
    report = cross_check(args.ks, args.n, args.samples, args.seed, args.sigma, workers=workers)
    est = report.estimate
    if args.format == "json":
        inputs = {"ks": args.ks, "n": args.n, "samples": args.samples, "seed": args.seed, "sigma": args.sigma}
        result = {
            "passed": report.passed,
            "exact": str(report.exact),
            "mean": est.mean,
            "std_error": est.std_error,
            "z": report.z_score,
        }
        print(envelope("mc-check", inputs, result))
    else:
        status = "pass" if report.passed else "FAIL"
        print(
            f"{status} exact={report.exact} mean={est.mean:.6g} stderr={est.std_error:.3g} "
            f"z={report.z_score:+.2f} samples={est.samples} seed={est.seed}"
        )
    return 0 if report.passed else EXIT_MC_FAIL


def cmd_semicircle(args) -> int:
    if args.monomial is not None:
        poly = [Fraction(0)] * args.monomial + [Fraction(1)]
    elif args.poly is not None:
        poly = args.poly
    else:
        raise ValueError("give --poly or --monomial")
    exact = semicircle_moment(poly) if args.mode in ("exact", "both") else None
    quad = numeric_semicircle_quadrature(poly, args.tol) if args.mode in ("quadrature", "both") else None
    if args.format == "json":
        result = {}
        if exact is not None:
            result["exact"] = str(exact)
        if quad is not None:
            result["quadrature"] = quad
            result["tolerance"] = args.tol
        print(envelope("semicircle", {"poly": [str(c) for c in poly], "mode": args.mode}, result))
    elif args.mode == "exact":
        print(exact)
    elif args.mode == "quadrature":
        print(f"{quad:.10f}")
    else:
        print(f"exact: {exact}")
        print(f"quadrature: {quad:.10f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="guemoments", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moment", help="moment polynomial of prod Tr X^k")
    p.add_argument("--ks", type=int_list, required=True)
    p.add_argument("--gamma-form", action="store_true", help="keep the genus variable g")
    p.add_argument("--eval", type=positive_int, metavar="N")
    p.add_argument("--method", choices=("recursion", "enumeration"), default="recursion")
    p.add_argument("--cap", type=positive_int, default=20, help="max points to enumerate")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--header", action="store_true")
    p.add_argument("--cache-stats", action="store_true", help="report memo size on stderr")
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("eta", help="chord diagram counts by (genus, boundaries)")
    p.add_argument("--ks", type=int_list, required=True)
    p.add_argument("--cap", type=positive_int, default=20, help="max points to enumerate")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--header", action="store_true")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("asympt", help="degree, leading or subleading coefficient")
    p.add_argument("--evens", type=int_list, default=[], help="i values for Tr X^(2i)")
    p.add_argument("--odds", type=int_list, default=[], help="j values for Tr X^(2j+1)")
    p.add_argument("--which", choices=("leading", "subleading", "degree"), default="leading")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser("corr-limit", help="large-N correlation of two multi-trace variables")
    for name in ("--f-evens", "--f-odds", "--g-evens", "--g-odds"):
        p.add_argument(name, type=int_list, default=[])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_corr_limit)

    p = sub.add_parser("mc-check", help="Monte Carlo check of an exact moment")
    p.add_argument("--ks", type=int_list, required=True)
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--samples", type=positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma", type=float, default=4.0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_mc_check)

    p = sub.add_parser("semicircle", help="integral against the semicircle density")
    p.add_argument("--poly", type=fraction_list, help="coefficients from x^0 upward")
    p.add_argument("--monomial", type=int, metavar="K", help="shorthand for x^K")
    p.add_argument("--mode", choices=("exact", "quadrature", "both"), default="exact")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_semicircle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UndefinedCorrelation as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
