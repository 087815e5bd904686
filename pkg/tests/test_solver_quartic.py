import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootsplit import (
    Polynomial,
    SingularDecompositionError,
    SpecialCase,
    match_roots,
    solve_aberth,
    solve_quartic_unified,
    solve_unified,
)
from _support import conjugate_closed

# Published worked example:
# x^4 + 2.0533927 x^3 - 2.8917903 x^2 + 7.6758959 x + 29.5803989.
GOLDEN = (2.0533927, -2.8917903, 7.6758959, 29.5803989)
GOLDEN_TRACE = {"b0": 3.738154, "b1": -13.44884, "c0": 5.336053, "p": 3.754882}
GOLDEN_ROOTS = (-2.236067 + 0j, -2.645752 + 0j,
                1.414213 + 1.732051j, 1.414213 - 1.732051j)


def rel_close(got, want, tol=1e-4):
    return abs(got - want) <= tol * abs(want)


class TestGolden:
    def test_roots(self):
        report = solve_quartic_unified(*GOLDEN)
        assert match_roots(report.roots, GOLDEN_ROOTS, 1e-5).matched

    def test_resolvent_contains_published_root(self):
        report = solve_quartic_unified(*GOLDEN)
        trace = report.trace
        assert trace.resolvent is not None
        closest = min(abs(z - GOLDEN_TRACE["b1"]) for z in trace.resolvent_roots)
        assert closest <= 1e-4 * abs(GOLDEN_TRACE["b1"])

    def test_trace_values(self):
        report = solve_quartic_unified(*GOLDEN)
        trace = report.trace
        assert rel_close(trace.b[0], GOLDEN_TRACE["b0"])
        assert rel_close(trace.b[1], GOLDEN_TRACE["b1"])
        assert rel_close(trace.c[0], GOLDEN_TRACE["c0"])
        assert rel_close(trace.p, GOLDEN_TRACE["p"])
        assert trace.special_case is SpecialCase.NONE

    def test_factorization_identity(self):
        report = solve_quartic_unified(*GOLDEN)
        assert report.factorization.identity_residual <= 1e-10

    def test_published_trace_reproduces_coefficients(self):
        # Substituting the published constituent values into the two factor
        # quadratics must reproduce the input coefficients (to the precision
        # of the published 7-digit values).
        b0, b1 = GOLDEN_TRACE["b0"], GOLDEN_TRACE["b1"]
        c0, p = GOLDEN_TRACE["c0"], GOLDEN_TRACE["p"]
        q1 = (1.0, b1 / (1 - p), (b0 - c0 * p) / (1 - p))
        q2 = (1.0, b1 / (1 + p), (b0 + c0 * p) / (1 + p))
        product = [
            1.0,
            q1[1] + q2[1],
            q1[2] + q1[1] * q2[1] + q2[2],
            q1[1] * q2[2] + q2[1] * q1[2],
            q1[2] * q2[2],
        ]
        for got, want in zip(product[1:], GOLDEN):
            assert abs(got - want) <= 1e-3 * max(1.0, abs(want))


class TestDegenerates:
    def test_biquadratic(self):
        report = solve_quartic_unified(0.0, -5.0, 0.0, 4.0)
        assert report.special_case is SpecialCase.BIQUADRATIC
        assert match_roots(report.roots, [1.0, -1.0, 2.0, -2.0], 1e-9).matched
        assert report.factorization.identity_residual <= 1e-12

    def test_biquadratic_complex(self):
        report = solve_quartic_unified(0.0, 0.0, 0.0, 1.0)
        assert report.special_case is SpecialCase.BIQUADRATIC
        expected = [cmath.exp(1j * cmath.pi * k / 4) for k in (1, 3, 5, 7)]
        assert match_roots(report.roots, expected, 1e-9).matched

    def test_zero_constant_with_cube(self):
        # x^4 + x = x (x^3 + 1)
        report = solve_quartic_unified(0.0, 0.0, 1.0, 0.0)
        assert report.special_case is SpecialCase.ZERO_CONSTANT
        expected = [0.0, -1.0, 0.5 + 0.8660254037844386j, 0.5 - 0.8660254037844386j]
        assert match_roots(report.roots, expected, 1e-9).matched

    def test_shift_path(self):
        poly = Polynomial((1.0, 0.0, 0.0, 1.0, 1.0))
        report = solve_quartic_unified(0.0, 0.0, 1.0, 1.0)
        assert report.trace.shift_applied == 1.0
        oracle = solve_aberth(poly)
        assert match_roots(report.roots, oracle.roots, 1e-8).matched
        assert report.factorization.identity_residual <= 1e-9

    def test_zero_constant_simple(self):
        report = solve_quartic_unified(-6.0, 11.0, -6.0, 0.0)
        assert report.special_case is SpecialCase.ZERO_CONSTANT
        assert match_roots(report.roots, [0.0, 1.0, 2.0, 3.0], 1e-9).matched

    def test_quadruple_root_falls_back(self):
        report = solve_quartic_unified(4.0, 6.0, 4.0, 1.0)
        assert report.special_case is SpecialCase.FALLBACK
        assert report.factorization is None
        assert match_roots(report.roots, [-1.0] * 4, 1e-4).matched
        assert report.max_residual <= 1e-7

    def test_quadruple_root_strict_raises(self):
        with pytest.raises(SingularDecompositionError):
            solve_quartic_unified(4.0, 6.0, 4.0, 1.0, allow_fallback=False)

    def test_double_double(self):
        # (x^2 - 2)^2 is even, so it takes the biquadratic route.
        report = solve_quartic_unified(0.0, -4.0, 0.0, 4.0)
        assert report.special_case is SpecialCase.BIQUADRATIC
        s = 2.0 ** 0.5
        assert match_roots(report.roots, [s, s, -s, -s], 1e-7).matched


coeff = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False,
                  allow_infinity=False)


@given(a3=coeff, a2=coeff, a1=coeff, a0=coeff)
def test_random_residual_and_closure(a3, a2, a1, a0):
    report = solve_quartic_unified(a3, a2, a1, a0)
    poly = Polynomial((1.0, a3, a2, a1, a0))
    bound = 1e-7 * poly.coefficient_scale
    assert all(abs(poly.evaluate(z)) <= bound for z in report.roots)
    assert conjugate_closed(report.roots, 1e-6)


@given(a3=coeff, a2=coeff, a1=coeff, a0=coeff)
def test_vieta_consistency(a3, a2, a1, a0):
    report = solve_quartic_unified(a3, a2, a1, a0)
    poly = Polynomial((1.0, a3, a2, a1, a0))
    bound = 1e-7 * poly.coefficient_scale
    root_sum = sum(report.roots)
    product = 1 + 0j
    for z in report.roots:
        product *= z
    assert abs(root_sum - (-a3)) <= bound
    assert abs(product - a0) <= bound


def test_dispatch_via_solve_unified():
    report = solve_unified(Polynomial((2.0, *[2.0 * v for v in GOLDEN])))
    assert match_roots(report.roots, GOLDEN_ROOTS, 1e-5).matched
