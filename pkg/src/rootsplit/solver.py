"""The power-difference decomposition solver for degrees 1 through 4.

The idea: rewrite the monic equation P(x) = 0 as

    [V(x)]^k - p^k [W(x)]^k
    ------------------------ = 0,
           1 - p^k

where V and W are monic of degree m with unknown coefficients b_j and c_j,
and (m, k) satisfy k*m = n with 2m + 1 = n (n odd) or n + 1 (n even).
Matching coefficients determines the unknowns; the left side then splits
into the factor (V - pW)/(1 - p) and its cofactor, and the roots fall out
of the factors.  One free unknown per even degree is pinned to zero
(c_0 = 0 for the quadratic, c_1 = 0 for the quartic).

Every solve records the intermediates in a DecompositionTrace so results
can be audited value by value.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .numeric import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    all_nth_roots,
    ensure_finite,
    is_effectively_real,
    principal_sqrt,
)
from .polynomial import ComplexPolynomial, Polynomial
from .reference import _stable_monic_quadratic, solve_aberth
from .report import (
    DecompositionPlan,
    DecompositionTrace,
    Factorization,
    Method,
    SolveReport,
    SpecialCase,
    UnsupportedDegreeError,
    build_report,
)


class SingularDecompositionError(ArithmeticError):
    """No branch or shift yields a usable split (p^k stuck at 1)."""


def plan_decomposition(n: int) -> DecompositionPlan:
    """The unique (m, k) for degree n: k*m = n, with 2m+1 = n (odd) or n+1 (even)."""
    if n < 2 or n > 4:
        raise UnsupportedDegreeError(
            f"no decomposition plan for degree {n}; supported degrees are 2-4")
    m = n // 2 if n % 2 == 0 else (n - 1) // 2
    return DecompositionPlan(n=n, m=m, k=n // m)


def _linear(root: complex) -> ComplexPolynomial:
    return ComplexPolynomial((complex(1.0), -complex(root)))


def _expand_pair(u: complex, v: complex) -> ComplexPolynomial:
    return ComplexPolynomial((complex(1.0), -(u + v), u * v))


def _factorization(monic: Polynomial, factor1: ComplexPolynomial,
                   factor2: ComplexPolynomial) -> Factorization:
    product = factor1.multiply(factor2)
    residual = max(abs(product.coeffs[i] - monic.coeffs[i])
                   for i in range(len(monic.coeffs)))
    return Factorization(factor1=factor1, factor2=factor2,
                         identity_residual=residual)


def _conjugate_paired_quadratics(
        roots: tuple[complex, ...],
        tol: ToleranceConfig) -> tuple[ComplexPolynomial, ComplexPolynomial]:
    """Split four roots into two quadratics, keeping conjugate pairs together."""
    reals = [z for z in roots if is_effectively_real(z, abs(z), tol)]
    others = [z for z in roots if not is_effectively_real(z, abs(z), tol)]
    if len(others) % 2 == 1:
        others.sort(key=lambda z: abs(z.imag))
        reals.append(others.pop(0))
    reals.sort(key=lambda z: (z.real, z.imag))
    others.sort(key=lambda z: (z.real, z.imag))
    ordered = reals + others
    return _expand_pair(ordered[0], ordered[1]), _expand_pair(ordered[2], ordered[3])


def _placeholder_trace(plan: DecompositionPlan, special: SpecialCase,
                       note: str, shift_applied: float = 0.0) -> DecompositionTrace:
    zeros = (complex(0.0),) * plan.m
    return DecompositionTrace(plan=plan, b=zeros, c=zeros, p=complex(0.0),
                              shift_applied=shift_applied, branch_note=note,
                              special_case=special)


def _refine_root_clusters(monic: Polynomial,
                          roots: tuple[complex, ...]) -> tuple[complex, ...]:
    """Sharpen multiple roots returned by the iteration oracle.

    The oracle stalls on an m-fold root in a cluster of radius roughly
    eps^(1/m) around it.  That root is a simple root of the (m-1)-th
    derivative, where plain Newton converges cleanly, so each cluster is
    collapsed onto the polished value.  The replacement is kept only when
    it does not worsen the residual, which protects genuinely distinct but
    close roots from being merged.
    """
    groups: list[list[complex]] = []
    for z in roots:
        for group in groups:
            if abs(z - group[0]) <= 1e-2 * (1.0 + abs(group[0])):
                group.append(z)
                break
        else:
            groups.append([z])
    if all(len(group) == 1 for group in groups):
        return roots

    refined: list[complex] = []
    for group in groups:
        if len(group) == 1:
            refined.extend(group)
            continue
        m = len(group)
        z = sum(group) / m
        target = monic
        for _ in range(m - 1):
            target = target.derivative()
        slope_poly = target.derivative() if target.degree >= 1 else None
        for _ in range(12):
            value = target.evaluate(z)
            if value == 0 or slope_poly is None:
                break
            slope = slope_poly.evaluate(z)
            if slope == 0:
                break
            step = value / slope
            z = z - step
            if abs(step) <= 1e-15 * (1.0 + abs(z)):
                break
        refined.extend([z] * m)

    old_residual = max(abs(monic.evaluate(z)) for z in roots)
    new_residual = max(abs(monic.evaluate(z)) for z in refined)
    return tuple(refined) if new_residual <= old_residual else roots


def _newton_refine(poly: Polynomial, z: complex, steps: int = 3) -> complex:
    """Guarded Newton steps on poly from z; keeps the best residual seen."""
    deriv = poly.derivative()
    best = z
    best_val = abs(poly.evaluate(z))
    current = z
    for _ in range(steps):
        value = poly.evaluate(current)
        slope = deriv.evaluate(current)
        if slope == 0:
            break
        current = current - value / slope
        current_val = abs(poly.evaluate(current))
        if current_val < best_val:
            best, best_val = current, current_val
        else:
            break
    return best


def _polish_roots(monic: Polynomial, roots: tuple[complex, ...]) -> tuple[complex, ...]:
    """One guarded Newton polish per root; cancellation in the closed forms
    can cost a few digits that this recovers without changing branches."""
    return tuple(_newton_refine(monic, z, steps=2) for z in roots)


def _fallback_report(monic: Polynomial, plan: DecompositionPlan, reason: str,
                     tol: ToleranceConfig, allow_fallback: bool) -> SolveReport:
    if not allow_fallback:
        raise SingularDecompositionError(reason)
    oracle = solve_aberth(monic, tol=tol)
    roots = _refine_root_clusters(monic, oracle.roots)
    trace = _placeholder_trace(
        plan, SpecialCase.FALLBACK,
        f"{reason}; roots taken from the simultaneous-iteration oracle")
    return build_report(monic, roots, Method.UNIFIED, trace=trace,
                        factorization=None)


# ---------------------------------------------------------------------------
# degree 2


def solve_quadratic_unified(a1: float, a0: float,
                            tol: ToleranceConfig = DEFAULT_TOLERANCES) -> SolveReport:
    """Roots of x^2 + a1 x + a0 via the m=1, k=2 split with c_0 = 0."""
    monic = Polynomial((1.0, float(a1), float(a0)))
    plan = plan_decomposition(2)
    a1 = float(a1)
    a0 = float(a0)

    if a0 == 0.0:
        roots = (complex(0.0), complex(-a1))
        trace = _placeholder_trace(plan, SpecialCase.ZERO_CONSTANT,
                                   "constant term is zero; x factors out directly")
        fact = _factorization(monic, _linear(roots[0]), _linear(roots[1]))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    if a1 == 0.0:
        s = principal_sqrt(complex(-a0))
        roots = (s, -s)
        trace = _placeholder_trace(
            plan, SpecialCase.BIQUADRATIC,
            "linear term is zero; roots are the square roots of -a0")
        fact = _factorization(monic, _linear(s), _linear(-s))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    b0 = 2.0 * a0 / a1
    s = principal_sqrt(complex(a1 * a1 - 4.0 * a0))
    p = s / a1
    if abs(1.0 - p * p) <= tol.eps_singular:
        # p^2 = 1 - 4a0/a1^2, so this means the constant term is negligible
        # against a1^2; factor out the near-zero root directly.
        roots = (complex(-a0 / a1), complex(-a1))
        trace = _placeholder_trace(
            plan, SpecialCase.ZERO_CONSTANT,
            "constant term negligible against a1^2; near-zero root factored out")
        fact = _factorization(monic, _linear(roots[0]), _linear(roots[1]))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    # Rationalized roots of the two linear factors x + b0/(1 -+ p).
    roots = ((-a1 - s) / 2.0, (-a1 + s) / 2.0)
    trace = DecompositionTrace(
        plan=plan, b=(complex(b0),), c=(complex(0.0),), p=p,
        branch_note="main path: b0 = 2 a0/a1, p = sqrt(a1^2 - 4 a0)/a1")
    # 1 - p cancels badly as p -> 1; (1 - p)(1 + p) = 4 a0/a1^2 gives a
    # cancellation-free equivalent.
    one_minus_p = (4.0 * a0 / (a1 * a1)) / (1.0 + p)
    fact = _factorization(
        monic,
        ComplexPolynomial((complex(1.0), b0 / one_minus_p)),
        ComplexPolynomial((complex(1.0), b0 / (1.0 + p))))
    return build_report(monic, tuple(ensure_finite(z, "root") for z in roots),
                        Method.UNIFIED, trace, fact)


# ---------------------------------------------------------------------------
# degree 3


def _cubic_shift_path(monic: Polynomial, tol: ToleranceConfig,
                      allow_fallback: bool) -> SolveReport:
    plan = plan_decomposition(3)
    last_reason = "shift retries exhausted"
    for r in (1.0, -1.0, 2.0):
        shifted = monic.shift(r)
        try:
            sub = solve_cubic_unified(shifted.coeffs[1], shifted.coeffs[2],
                                      shifted.coeffs[3], tol,
                                      allow_fallback=False)
        except SingularDecompositionError as exc:
            last_reason = f"shift by {r} still hit a singular split ({exc})"
            continue
        roots = tuple(z + r for z in sub.roots)
        trace = dataclasses.replace(
            sub.trace, shift_applied=r,
            branch_note=f"quadratic-term coefficient was zero; solved P(x + {r}) "
                        f"and shifted back ({sub.trace.branch_note})")
        fact = None
        if sub.factorization is not None:
            fact = _factorization(monic,
                                  sub.factorization.factor1.shift(-r),
                                  sub.factorization.factor2.shift(-r))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)
    return _fallback_report(monic, plan, last_reason, tol, allow_fallback)


def solve_cubic_unified(a2: float, a1: float, a0: float,
                        tol: ToleranceConfig = DEFAULT_TOLERANCES,
                        allow_fallback: bool = True) -> SolveReport:
    """Roots of x^3 + a2 x^2 + a1 x + a0 via the m=1, k=3 split.

    Main path: the sum f1 = b0 + c0 and product f2 = b0 c0 of the two
    constituent constants satisfy

        f1 = (a1 a2 - 9 a0) / (a2^2 - 3 a1)
        f2 = (a1^2 - 3 a0 a2) / (a2^2 - 3 a1),

    so b0 and c0 are the roots of y^2 - f1 y + f2 = 0, and then
    p^3 = (a2 - 3 b0)/(a2 - 3 c0).  One root comes from the linear factor,
    x1 = (p c0 - b0)/(1 - p); the other two from the quadratic cofactor.
    """
    a2, a1, a0 = float(a2), float(a1), float(a0)
    monic = Polynomial((1.0, a2, a1, a0))
    plan = plan_decomposition(3)

    if a0 == 0.0:
        sub = solve_quadratic_unified(a2, a1, tol)
        roots = (complex(0.0),) + sub.roots
        trace = _placeholder_trace(
            plan, SpecialCase.ZERO_CONSTANT,
            "constant term is zero; root 0 deflated, remaining quadratic solved")
        fact = _factorization(monic, _linear(complex(0.0)),
                              ComplexPolynomial((complex(1.0), complex(a2), complex(a1))))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    # a2^2 - 3 a1 sits under every division below and can cancel severely;
    # floats are exact rationals, so evaluating it (and f1, f2) in Fraction
    # arithmetic gives correctly rounded values at negligible cost.
    exact_a2, exact_a1, exact_a0 = Fraction(a2), Fraction(a1), Fraction(a0)
    exact_gate = exact_a2 * exact_a2 - 3 * exact_a1
    depressed_gate = float(exact_gate)
    if abs(depressed_gate) <= tol.eps_singular * max(1.0, a2 * a2, 3.0 * abs(a1)):
        # The cubic is (x + a2/3)^3 = (a2/3)^3 - a0; take all cube roots.
        cube = complex((a2 / 3.0) ** 3 - a0)
        branches = all_nth_roots(cube, 3)
        branches = [complex(w.real, 0.0) if is_effectively_real(w, abs(w), tol) else w
                    for w in branches]
        roots = tuple(complex(-a2 / 3.0) + w for w in branches)
        trace = _placeholder_trace(
            plan, SpecialCase.DEPRESSED_SPECIAL,
            "a2^2 = 3 a1: rewrote as a pure cube and took its three cube roots")
        real_first = sorted(range(3), key=lambda i: (abs(branches[i].imag),))
        others = [i for i in range(3) if i != real_first[0]]
        fact = _factorization(monic, _linear(roots[real_first[0]]),
                              _expand_pair(roots[others[0]], roots[others[1]]))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    if a2 == 0.0:
        return _cubic_shift_path(monic, tol, allow_fallback)

    f1 = float((exact_a1 * exact_a2 - 9 * exact_a0) / exact_gate)
    f2 = float((exact_a1 * exact_a1 - 3 * exact_a0 * exact_a2) / exact_gate)
    disc_f = f1 * f1 - 4.0 * f2
    if abs(disc_f) <= tol.eps_singular * max(1.0, f1 * f1, 4.0 * abs(f2)):
        # b0 = c0 forces p^3 = 1: the split degenerates, which happens exactly
        # when -b0 is a repeated root.  Vieta supplies the remaining root.
        b0 = f1 / 2.0
        roots = (complex(-b0), complex(-b0), complex(2.0 * b0 - a2))
        trace = dataclasses.replace(
            _placeholder_trace(
                plan, SpecialCase.LINEAR_CUBE,
                "b0 = c0 (repeated-root input); -b0 taken twice, third root "
                "from the coefficient sum"),
            b=(complex(b0),), c=(complex(b0),),
            f1=complex(f1), f2=complex(f2))
        fact = _factorization(monic, _linear(roots[0]),
                              _expand_pair(roots[1], roots[2]))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    s = principal_sqrt(complex(disc_f))
    # b0 always takes the + branch of the square root.  Whichever of the two
    # is the smaller-magnitude constituent is computed through the product
    # f2 = b0 c0 to avoid subtractive cancellation.
    if disc_f < 0.0:
        b0 = (complex(f1) + s) / 2.0
        c0 = b0.conjugate()
    elif f1 >= 0.0:
        b0 = (complex(f1) + s) / 2.0
        c0 = complex(f2) / b0 if b0 != 0 else (complex(f1) - s) / 2.0
    else:
        c0 = (complex(f1) - s) / 2.0
        b0 = complex(f2) / c0 if c0 != 0 else (complex(f1) + s) / 2.0
    # p^3 = (a2 - 3 b0)/(a2 - 3 c0), but the smaller of those two terms
    # cancels badly.  Their product is exactly a2^2 - 3 a1, so the ratio can
    # be formed from the large side and the gate alone.
    side_b = a2 - 3.0 * b0
    side_c = a2 - 3.0 * c0
    if abs(side_c) >= abs(side_b):
        p3 = complex(depressed_gate) / (side_c * side_c)
    else:
        p3 = (side_b * side_b) / complex(depressed_gate)

    branches = all_nth_roots(p3, 3)
    # Prefer an effectively-real branch (there is one whenever b0, c0 are
    # real); otherwise minimize |1 - p|, which maximizes the cofactor
    # denominator |1 + p + p^2| for the fixed p^3.  Branches inside the
    # singular guard are skipped.
    ordered = sorted(
        range(3),
        key=lambda i: (0 if is_effectively_real(branches[i], abs(branches[i]), tol)
                       else 1, abs(1.0 - branches[i])))
    p = None
    branch_index = -1
    for i in ordered:
        candidate = branches[i]
        if is_effectively_real(candidate, abs(candidate), tol):
            candidate = complex(candidate.real, 0.0)
        if abs(1.0 - candidate) > tol.eps_singular:
            p = candidate
            branch_index = i
            break
    if p is None:
        return _fallback_report(
            monic, plan, "every cube-root branch leaves 1 - p below the "
            "singular guard", tol, allow_fallback)

    x1 = (p * c0 - b0) / (1.0 - p)
    cof_den = 1.0 + p + p * p
    cof_b = (2.0 * b0 + 2.0 * p * p * c0 + p * f1) / cof_den
    cof_c = (b0 * b0 + p * p * c0 * c0 + p * f2) / cof_den
    x2, x3 = _stable_monic_quadratic(cof_b, cof_c)
    roots = _polish_roots(monic, tuple(ensure_finite(z, "root")
                                       for z in (x1, x2, x3)))

    if is_effectively_real(p, abs(p), tol):
        branch_why = "effectively real"
    else:
        branch_why = "no real branch; closest to 1 outside the singular guard"
    trace = DecompositionTrace(
        plan=plan, b=(b0,), c=(c0,), p=p, f1=complex(f1), f2=complex(f2),
        branch_note=f"cube-root branch {branch_index} of p^3 chosen ({branch_why})")
    fact = _factorization(
        monic,
        ComplexPolynomial((complex(1.0), (b0 - p * c0) / (1.0 - p))),
        ComplexPolynomial((complex(1.0), cof_b, cof_c)))
    return build_report(monic, roots, Method.UNIFIED, trace, fact)


# ---------------------------------------------------------------------------
# degree 4


def _quartic_shift_path(monic: Polynomial, tol: ToleranceConfig,
                        allow_fallback: bool) -> SolveReport:
    plan = plan_decomposition(4)
    last_reason = "shift retries exhausted"
    for r in (1.0, -1.0, 2.0):
        shifted = monic.shift(r)
        try:
            sub = solve_quartic_unified(shifted.coeffs[1], shifted.coeffs[2],
                                        shifted.coeffs[3], shifted.coeffs[4],
                                        tol, allow_fallback=False)
        except SingularDecompositionError as exc:
            last_reason = f"shift by {r} still hit a singular split ({exc})"
            continue
        roots = tuple(z + r for z in sub.roots)
        trace = dataclasses.replace(
            sub.trace, shift_applied=r,
            branch_note=f"cubic-term coefficient was zero; solved P(x + {r}) "
                        f"and shifted back ({sub.trace.branch_note})")
        fact = None
        if sub.factorization is not None:
            fact = _factorization(monic,
                                  sub.factorization.factor1.shift(-r),
                                  sub.factorization.factor2.shift(-r))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)
    return _fallback_report(monic, plan, last_reason, tol, allow_fallback)


def solve_quartic_unified(a3: float, a2: float, a1: float, a0: float,
                          tol: ToleranceConfig = DEFAULT_TOLERANCES,
                          allow_fallback: bool = True) -> SolveReport:
    """Roots of x^4 + a3 x^3 + a2 x^2 + a1 x + a0 via the m=2, k=2 split.

    With c_1 pinned to zero the coefficient match gives b_0 = a1/a3 at once,
    and eliminating p^2 = (a3 - 2 b1)/a3 and c_0 leaves a cubic in b_1:

        b1^3 - (4 a2/a3) b1^2 + 4 (a1 a3 + a2^2 - 4 a0)/a3^2 b1
             + 8 (a0 a3^2 + a1^2 - a1 a2 a3)/a3^3 = 0.

    Any usable root of that cubic yields the split into the two quadratics
    x^2 + b1/(1 -+ p) x + (b0 -+ c0 p)/(1 -+ p); their four roots are the
    answer.  c_0 follows from

        c0 = 2 (2 a0 a3 b1 - a1^2) / (a3 (2 a2 b1 - 2 a1 - a3 b1^2)).
    """
    a3, a2, a1, a0 = float(a3), float(a2), float(a1), float(a0)
    monic = Polynomial((1.0, a3, a2, a1, a0))
    plan = plan_decomposition(4)

    if a0 == 0.0:
        sub = solve_cubic_unified(a3, a2, a1, tol, allow_fallback)
        roots = (complex(0.0),) + sub.roots
        trace = _placeholder_trace(
            plan, SpecialCase.ZERO_CONSTANT,
            f"constant term is zero; root 0 deflated, cubic solved for the rest "
            f"(inner path: {sub.trace.special_case.value})")
        factor1, factor2 = _conjugate_paired_quadratics(roots, tol)
        fact = _factorization(monic, factor1, factor2)
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    if a3 == 0.0 and a1 == 0.0:
        sub = solve_quadratic_unified(a2, a0, tol)
        y1, y2 = sub.roots
        s1 = principal_sqrt(y1)
        s2 = principal_sqrt(y2)
        roots = (s1, -s1, s2, -s2)
        trace = _placeholder_trace(
            plan, SpecialCase.BIQUADRATIC,
            "only even powers present; solved as a quadratic in x^2")
        fact = _factorization(
            monic,
            ComplexPolynomial((complex(1.0), complex(0.0), -y1)),
            ComplexPolynomial((complex(1.0), complex(0.0), -y2)))
        return build_report(monic, roots, Method.UNIFIED, trace, fact)

    if a3 == 0.0:
        return _quartic_shift_path(monic, tol, allow_fallback)

    b0 = a1 / a3
    resolvent = Polynomial((
        1.0,
        -4.0 * a2 / a3,
        4.0 * (a1 * a3 + a2 * a2 - 4.0 * a0) / (a3 * a3),
        8.0 * (a0 * a3 * a3 + a1 * a1 - a1 * a2 * a3) / (a3 ** 3)))
    try:
        resolvent_report = solve_cubic_unified(
            resolvent.coeffs[1], resolvent.coeffs[2], resolvent.coeffs[3],
            tol, allow_fallback=False)
    except SingularDecompositionError:
        return _fallback_report(
            monic, plan, "the resolvent cubic itself hit a singular split",
            tol, allow_fallback)
    candidates = resolvent_report.roots

    survivors: list[tuple[complex, complex, float, bool]] = []
    for cand in candidates:
        real_flag = is_effectively_real(cand, abs(cand), tol)
        b1 = complex(cand.real, 0.0) if real_flag else cand
        if abs(b1) <= tol.eps_singular:
            continue  # b1 = 0 would force p^2 = 1
        if abs(2.0 * b1 - a3) <= tol.eps_singular:
            continue  # would force p = 0 (a perfect-square input)
        den_terms = abs(a3) * (2.0 * abs(a2) * abs(b1) + 2.0 * abs(a1)
                               + abs(a3) * abs(b1) ** 2)
        c0_den = a3 * (2.0 * a2 * b1 - 2.0 * a1 - a3 * b1 * b1)
        if abs(c0_den) <= tol.eps_singular * max(1.0, den_terms):
            continue
        p = principal_sqrt((a3 - 2.0 * b1) / a3)
        margin = min(abs(b1), abs(2.0 * b1 - a3), abs(1.0 - p * p))
        survivors.append((b1, p, margin, real_flag))

    if not survivors:
        return _fallback_report(
            monic, plan, "every resolvent-cubic root hit a singular guard",
            tol, allow_fallback)

    survivors.sort(key=lambda item: (0 if item[3] else 1, -item[2],
                                     -item[0].real, -item[0].imag))
    b1, p, margin, real_flag = survivors[0]
    # The closed-form cubic can lose digits when the resolvent coefficients
    # span scales; sharpen the selected root before it feeds p and c0.
    b1 = _newton_refine(resolvent, b1)
    p = principal_sqrt((a3 - 2.0 * b1) / a3)
    c0 = 2.0 * (2.0 * a0 * a3 * b1 - a1 * a1) / (
        a3 * (2.0 * a2 * b1 - 2.0 * a1 - a3 * b1 * b1))

    factor1 = ComplexPolynomial((complex(1.0), b1 / (1.0 - p),
                                 (b0 - c0 * p) / (1.0 - p)))
    factor2 = ComplexPolynomial((complex(1.0), b1 / (1.0 + p),
                                 (b0 + c0 * p) / (1.0 + p)))
    x1, x2 = _stable_monic_quadratic(factor1.coeffs[1], factor1.coeffs[2])
    x3, x4 = _stable_monic_quadratic(factor2.coeffs[1], factor2.coeffs[2])
    roots = _polish_roots(monic, tuple(ensure_finite(z, "root")
                                       for z in (x1, x2, x3, x4)))

    trace = DecompositionTrace(
        plan=plan, b=(complex(b0), b1), c=(c0, complex(0.0)), p=p,
        resolvent=resolvent, resolvent_roots=candidates,
        branch_note=f"resolvent root {'(effectively real)' if real_flag else '(complex)'} "
                    f"with largest singular-guard margin {margin:.3e} selected for b1")
    fact = _factorization(monic, factor1, factor2)
    return build_report(monic, roots, Method.UNIFIED, trace, fact)


# ---------------------------------------------------------------------------
# dispatch


def solve_unified(poly: Polynomial, tol: ToleranceConfig = DEFAULT_TOLERANCES,
                  allow_fallback: bool = True) -> SolveReport:
    """Normalize to monic and dispatch on degree (1 through 4)."""
    monic = poly.monic_normalize()
    n = monic.degree
    if n == 0:
        raise UnsupportedDegreeError("a nonzero constant has no roots")
    if n > 4:
        raise UnsupportedDegreeError(
            f"degree {n} is out of scope: closed-form splitting covers degrees "
            "up to 4 (higher degrees have no general radical solution; the "
            "degree-6 embedding of quintics is deliberately not implemented)")
    if n == 1:
        return build_report(monic, (complex(-monic.coeffs[1]),), Method.UNIFIED)
    if n == 2:
        return solve_quadratic_unified(monic.coeffs[1], monic.coeffs[2], tol)
    if n == 3:
        return solve_cubic_unified(monic.coeffs[1], monic.coeffs[2],
                                   monic.coeffs[3], tol, allow_fallback)
    return solve_quartic_unified(monic.coeffs[1], monic.coeffs[2],
                                 monic.coeffs[3], monic.coeffs[4], tol,
                                 allow_fallback)


def decompose(poly: Polynomial,
              tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Factorization:
    """Split a monic polynomial of degree 2-4 into its two constituent factors.

    Raises SingularDecompositionError when no branch yields a usable split
    (there is no oracle fallback here; the factorization either exists or
    the call fails).
    """
    monic = poly.monic_normalize()
    if monic.degree < 2 or monic.degree > 4:
        raise UnsupportedDegreeError(
            f"decompose needs degree 2-4, got degree {monic.degree}")
    report = solve_unified(monic, tol, allow_fallback=False)
    assert report.factorization is not None
    return report.factorization
