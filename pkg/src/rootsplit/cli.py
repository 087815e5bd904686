"""Command-line front end.

Subcommands:

    solve      parse one polynomial and print its roots (optionally the trace)
    decompose  print the two constituent factors and the identity residual
    check      solve with all three methods and cross-match the root sets
    batch      seeded random corpus: solve, validate against the oracle, summarize

Exit codes: 0 success, 2 usage or parse error, 3 solver error, 4 batch failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .numeric import DEFAULT_TOLERANCES, NumericOverflowError, ToleranceConfig
from .parsing import PolynomialSyntaxError, format_polynomial, parse_polynomial
from .polynomial import (
    ComplexPolynomial,
    DeflationError,
    Polynomial,
    ZeroPolynomialError,
)
from .corpus import SplitMix64, random_monic_polynomial
from .reference import NoConvergenceError, solve_aberth, solve_classical
from .report import Method, SolveReport, UnsupportedDegreeError
from .solver import SingularDecompositionError, decompose, solve_unified
from .verify import match_roots

_SOLVER_ERRORS = (UnsupportedDegreeError, SingularDecompositionError,
                  NoConvergenceError, NumericOverflowError,
                  ZeroPolynomialError, DeflationError)

_MULTIPLE_ROOT_SEPARATION = 1e-3
_MULTIPLE_ROOT_TOL = 1e-4


def _fmt(value: float) -> str:
    return format(value, ".9g")


def _fmt_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{_fmt(z.real)} {sign} {_fmt(abs(z.imag))}i"


def _fmt_complex_poly(poly: ComplexPolynomial) -> str:
    degree = poly.degree
    parts: list[str] = []
    for k, c in zip(range(degree, -1, -1), poly.coeffs):
        variable = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if c.imag != 0.0:
            term = f"({_fmt_complex(c)}){variable}"
            parts.append(f" + {term}" if parts else term)
            continue
        value = c.real
        if value == 0.0 and k != degree:
            continue
        magnitude = _fmt(abs(value))
        body = variable if (magnitude == "1" and k > 0) else f"{magnitude}{variable}"
        if not parts:
            parts.append(body if value >= 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if value >= 0 else f" - {body}")
    return "".join(parts) if parts else "0"


def _sorted_roots(roots: Sequence[complex]) -> list[complex]:
    return sorted(roots, key=lambda z: (z.real, z.imag))


def _complex_payload(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _trace_payload(report: SolveReport) -> dict:
    trace = report.trace
    assert trace is not None
    payload: dict = {
        "plan": {"n": trace.plan.n, "m": trace.plan.m, "k": trace.plan.k},
        "shift_applied": trace.shift_applied,
        "b": [_complex_payload(z) for z in trace.b],
        "c": [_complex_payload(z) for z in trace.c],
        "p": _complex_payload(trace.p),
    }
    if trace.f1 is not None:
        payload["f1"] = _complex_payload(trace.f1)
    if trace.f2 is not None:
        payload["f2"] = _complex_payload(trace.f2)
    if trace.resolvent is not None:
        payload["resolvent"] = list(trace.resolvent.coeffs)
    if trace.resolvent_roots is not None:
        payload["resolvent_roots"] = [_complex_payload(z)
                                      for z in trace.resolvent_roots]
    payload["branch_note"] = trace.branch_note
    payload["special_case"] = trace.special_case.value
    return payload


def report_payload(report: SolveReport, include_trace: bool = False) -> dict:
    """JSON-ready view of a report with a stable key order."""
    payload: dict = {
        "degree": report.input.degree,
        "method": report.method.value,
        "roots": [_complex_payload(z) for z in _sorted_roots(report.roots)],
        "max_residual": report.max_residual,
        "special_case": report.special_case.value,
    }
    if include_trace and report.trace is not None:
        payload["trace"] = _trace_payload(report)
    if report.factorization is not None:
        payload["factorization"] = {
            "factor1": [_complex_payload(c) for c in report.factorization.factor1.coeffs],
            "factor2": [_complex_payload(c) for c in report.factorization.factor2.coeffs],
            "identity_residual": report.factorization.identity_residual,
        }
    return payload


def render_report_json(report: SolveReport, include_trace: bool = False) -> str:
    return json.dumps(report_payload(report, include_trace))


def _render_report_text(report: SolveReport, include_trace: bool) -> str:
    lines = [
        f"polynomial: {format_polynomial(report.input, 9)}",
        f"degree: {report.input.degree}",
        f"method: {report.method.value}",
        f"special case: {report.special_case.value}",
        "roots:",
    ]
    for z in _sorted_roots(report.roots):
        lines.append(f"  {_fmt_complex(z)}")
    lines.append(f"max residual: {_fmt(report.max_residual)}")
    trace = report.trace
    if include_trace and trace is not None:
        lines.append("trace:")
        lines.append(f"  plan: n={trace.plan.n} m={trace.plan.m} k={trace.plan.k}")
        lines.append(f"  shift applied: {_fmt(trace.shift_applied)}")
        lines.append("  b: [" + ", ".join(_fmt_complex(z) for z in trace.b) + "]")
        lines.append("  c: [" + ", ".join(_fmt_complex(z) for z in trace.c) + "]")
        lines.append(f"  p: {_fmt_complex(trace.p)}")
        if trace.f1 is not None:
            lines.append(f"  f1: {_fmt_complex(trace.f1)}")
        if trace.f2 is not None:
            lines.append(f"  f2: {_fmt_complex(trace.f2)}")
        if trace.resolvent is not None:
            lines.append(f"  resolvent: {format_polynomial(trace.resolvent, 9)}")
        if trace.resolvent_roots is not None:
            lines.append("  resolvent roots: ["
                         + ", ".join(_fmt_complex(z) for z in trace.resolvent_roots)
                         + "]")
        lines.append(f"  branch note: {trace.branch_note}")
    if report.factorization is not None:
        lines.append("factorization:")
        lines.append(f"  factor1: {_fmt_complex_poly(report.factorization.factor1)}")
        lines.append(f"  factor2: {_fmt_complex_poly(report.factorization.factor2)}")
        lines.append(
            f"  identity residual: {_fmt(report.factorization.identity_residual)}")
    return "\n".join(lines)


class _UsageError(Exception):
    pass


def _read_polynomial(args: argparse.Namespace) -> Polynomial:
    if args.coeffs is not None:
        try:
            values = [float(part) for part in args.coeffs.split(",") if part.strip()]
        except ValueError as exc:
            raise _UsageError(f"invalid --coeffs value: {exc}") from exc
        if not values:
            raise _UsageError("--coeffs needs at least one value")
        return Polynomial(tuple(values))
    if args.expression is None:
        raise _UsageError("provide a polynomial expression or --coeffs")
    return parse_polynomial(args.expression)


def _min_separation(roots: Sequence[complex]) -> float:
    n = len(roots)
    if n < 2:
        return float("inf")
    return min(abs(roots[i] - roots[j])
               for i in range(n) for j in range(i + 1, n))


def _match_tolerance(base: float, roots: Sequence[complex]) -> float:
    # Root error scales like eps^(1/multiplicity); relax near multiple roots.
    if _min_separation(roots) < _MULTIPLE_ROOT_SEPARATION:
        return max(base, _MULTIPLE_ROOT_TOL)
    return base


def _solve_with_method(poly: Polynomial, method: str, strict: bool,
                       tol: ToleranceConfig) -> SolveReport:
    if method in ("auto", "unified"):
        return solve_unified(poly, tol, allow_fallback=not strict)
    if method == "classical":
        return solve_classical(poly, tol)
    return solve_aberth(poly, tol=tol)


def _cmd_solve(args: argparse.Namespace) -> int:
    poly = _read_polynomial(args)
    report = _solve_with_method(poly, args.method, args.strict, DEFAULT_TOLERANCES)
    if args.format == "json":
        print(render_report_json(report, include_trace=args.trace))
    else:
        print(_render_report_text(report, include_trace=args.trace))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    poly = _read_polynomial(args)
    fact = decompose(poly)
    if args.format == "json":
        payload = {
            "factor1": [_complex_payload(c) for c in fact.factor1.coeffs],
            "factor2": [_complex_payload(c) for c in fact.factor2.coeffs],
            "identity_residual": fact.identity_residual,
        }
        print(json.dumps(payload))
    else:
        print(f"factor1: {_fmt_complex_poly(fact.factor1)}")
        print(f"factor2: {_fmt_complex_poly(fact.factor2)}")
        print(f"identity residual: {_fmt(fact.identity_residual)}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    poly = _read_polynomial(args)
    monic = poly.monic_normalize()
    if monic.degree < 2 or monic.degree > 4:
        raise UnsupportedDegreeError(
            f"check needs degree 2-4, got degree {monic.degree}")
    tol = DEFAULT_TOLERANCES
    reports = {
        "unified": solve_unified(monic, tol, allow_fallback=not args.strict),
        "classical": solve_classical(monic, tol),
        "aberth": solve_aberth(monic, tol=tol),
    }
    base_tol = args.tol if args.tol is not None else tol.eps_match
    match_tol = _match_tolerance(base_tol, reports["unified"].roots)
    names = list(reports)
    matches = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            outcome = match_roots(reports[names[i]].roots,
                                  reports[names[j]].roots, match_tol)
            matches.append((names[i], names[j], outcome))
    agree = all(outcome.matched for _, _, outcome in matches)

    if args.format == "json":
        payload = {
            "degree": monic.degree,
            "tolerance": match_tol,
            "methods": {
                name: {
                    "roots": [_complex_payload(z)
                              for z in _sorted_roots(reports[name].roots)],
                    "max_residual": reports[name].max_residual,
                    "special_case": reports[name].special_case.value,
                }
                for name in names
            },
            "matches": [
                {"a": a, "b": b, "max_distance": outcome.max_distance,
                 "matched": outcome.matched}
                for a, b, outcome in matches
            ],
            "agree": agree,
        }
        print(json.dumps(payload))
    else:
        print(f"polynomial: {format_polynomial(monic, 9)}")
        for name in names:
            rep = reports[name]
            roots = ", ".join(_fmt_complex(z) for z in _sorted_roots(rep.roots))
            print(f"{name:<9} roots: {roots}")
            print(f"{name:<9} max residual: {_fmt(rep.max_residual)}")
        print(f"pairwise match tolerance: {_fmt(match_tol)}")
        for a, b, outcome in matches:
            status = "ok" if outcome.matched else "MISMATCH"
            print(f"  {a} vs {b}: max distance {_fmt(outcome.max_distance)} {status}")
        print(f"status: {'AGREE' if agree else 'DISAGREE'}")
    return 0 if agree else 1


def _cmd_batch(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise _UsageError("--count must be at least 1")
    if args.degree not in (2, 3, 4):
        raise _UsageError("--degree must be 2, 3, or 4")
    try:
        low_text, high_text = args.coeff_range.split(",")
        low, high = float(low_text), float(high_text)
    except ValueError:
        raise _UsageError("--coeff-range must look like 'low,high'")
    if not low <= high:
        raise _UsageError("--coeff-range must satisfy low <= high")

    tol = DEFAULT_TOLERANCES
    base_tol = args.tol if args.tol is not None else tol.eps_match
    rng = SplitMix64(args.seed)
    special_counts: dict[str, int] = {}
    failures: list[dict] = []
    max_residual = 0.0
    max_distance = 0.0

    for index in range(args.count):
        poly = random_monic_polynomial(rng, args.degree, low, high)
        scale = poly.coefficient_scale
        try:
            report = solve_unified(poly, tol, allow_fallback=not args.strict)
        except _SOLVER_ERRORS as exc:
            failures.append({"index": index, "coeffs": list(poly.coeffs),
                             "reason": f"solver error: {exc}"})
            continue
        tag = report.special_case.value
        special_counts[tag] = special_counts.get(tag, 0) + 1
        max_residual = max(max_residual, report.max_residual)

        try:
            oracle = solve_aberth(poly, tol=tol)
        except NoConvergenceError as exc:
            failures.append({"index": index, "coeffs": list(poly.coeffs),
                             "reason": f"oracle did not converge: {exc}"})
            continue
        match_tol = _match_tolerance(base_tol, oracle.roots)
        outcome = match_roots(report.roots, oracle.roots, match_tol)
        max_distance = max(max_distance, outcome.max_distance)
        if not outcome.matched:
            failures.append({
                "index": index, "coeffs": list(poly.coeffs),
                "reason": f"root mismatch vs oracle: max distance "
                          f"{outcome.max_distance:.3e} > {match_tol:.3e}"})
        elif report.max_residual > tol.eps_residual * scale:
            failures.append({
                "index": index, "coeffs": list(poly.coeffs),
                "reason": f"residual {report.max_residual:.3e} above bound "
                          f"{tol.eps_residual * scale:.3e}"})

    if args.format == "json":
        payload = {
            "count": args.count,
            "degree": args.degree,
            "seed": args.seed,
            "coeff_range": [low, high],
            "special_case_counts": dict(sorted(special_counts.items())),
            "max_residual": max_residual,
            "max_match_distance": max_distance,
            "failures": failures,
        }
        print(json.dumps(payload))
    else:
        print(f"batch: count={args.count} degree={args.degree} seed={args.seed} "
              f"coeff-range=[{_fmt(low)},{_fmt(high)}]")
        counts = " ".join(f"{name}={count}"
                          for name, count in sorted(special_counts.items()))
        print(f"special cases: {counts}")
        print(f"max residual: {_fmt(max_residual)}")
        print(f"max match distance vs oracle: {_fmt(max_distance)}")
        print(f"failures: {len(failures)}")
        for failure in failures:
            print(f"  index {failure['index']} coeffs={failure['coeffs']}: "
                  f"{failure['reason']}")
    return 4 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootsplit",
        description="Solve polynomial equations of degree 1-4 by splitting "
                    "them into two constituent factors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_options(p: argparse.ArgumentParser, with_method: bool = True) -> None:
        p.add_argument("expression", nargs="?", default=None,
                       help="polynomial in x, e.g. 'x^2 - 3x + 2'")
        p.add_argument("--coeffs",
                       help="comma-separated coefficients, highest degree first")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--strict", action="store_true",
                       help="fail on singular decompositions instead of "
                            "falling back to the iteration oracle")
        p.add_argument("--tol", type=float, default=None,
                       help="override the root-match tolerance (default 1e-6)")
        if with_method:
            p.add_argument("--method",
                           choices=("auto", "unified", "classical", "aberth"),
                           default="auto")

    solve_p = sub.add_parser("solve", help="solve one polynomial")
    add_io_options(solve_p)
    solve_p.add_argument("--trace", action="store_true",
                         help="print every intermediate of the decomposition")
    solve_p.set_defaults(func=_cmd_solve)

    decompose_p = sub.add_parser("decompose",
                                 help="print the two constituent factors")
    add_io_options(decompose_p, with_method=False)
    decompose_p.set_defaults(func=_cmd_decompose)

    check_p = sub.add_parser("check",
                             help="cross-validate all three solvers on one input")
    add_io_options(check_p, with_method=False)
    check_p.set_defaults(func=_cmd_check)

    batch_p = sub.add_parser("batch",
                             help="run a seeded random corpus against the oracle")
    batch_p.add_argument("--count", type=int, required=True)
    batch_p.add_argument("--degree", type=int, required=True)
    batch_p.add_argument("--seed", type=int, default=0)
    batch_p.add_argument("--coeff-range", default="-10,10",
                         help="low,high for the uniform coefficients")
    batch_p.add_argument("--format", choices=("text", "json"), default="text")
    batch_p.add_argument("--strict", action="store_true")
    batch_p.add_argument("--tol", type=float, default=None)
    batch_p.set_defaults(func=_cmd_batch)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolynomialSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _SOLVER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
