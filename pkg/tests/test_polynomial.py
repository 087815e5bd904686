import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootsplit import (
    ComplexPolynomial,
    DeflationError,
    Polynomial,
    ZeroPolynomialError,
)
from rootsplit.polynomial import polynomial_from_roots

coeff = st.floats(min_value=-10.0, max_value=10.0,
                  allow_nan=False, allow_infinity=False)


def poly_strategy(min_degree=1, max_degree=4):
    return st.integers(min_degree, max_degree).flatmap(
        lambda d: st.tuples(*([coeff] * (d + 1))).map(Polynomial))


class TestEvaluate:
    def test_root_of_factored_quadratic(self):
        assert Polynomial((1.0, -3.0, 2.0)).evaluate(2.0) == 0.0

    def test_cube_of_one_plus_i(self):
        assert Polynomial((1.0, 0.0, 0.0, 0.0)).evaluate(1 + 1j) == -2 + 2j

    def test_published_quartic_root(self):
        poly = Polynomial((1.0, 2.0533927, -2.8917903, 7.6758959, 29.5803989))
        assert abs(poly.evaluate(-2.236067)) <= 1e-4


class TestMonicNormalize:
    def test_scales(self):
        assert Polynomial((2.0, -6.0, 4.0)).monic_normalize().coeffs == (1.0, -3.0, 2.0)

    def test_already_monic(self):
        poly = Polynomial((1.0, 0.0, 0.0, 1.0))
        assert poly.monic_normalize().coeffs == poly.coeffs

    def test_degree_collapse_then_scale(self):
        assert Polynomial((0.0, 0.0, 5.0, -10.0)).monic_normalize().coeffs == (1.0, -2.0)

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            Polynomial((0.0, 0.0)).monic_normalize()


class TestShift:
    def test_cube(self):
        assert Polynomial((1.0, 0.0, 0.0, 0.0)).shift(1.0).coeffs == (1.0, 3.0, 3.0, 1.0)

    def test_zero_shift_is_identity(self):
        poly = Polynomial((1.0, -3.0, 2.0, 7.0))
        assert poly.shift(0.0).coeffs == poly.coeffs

    def test_roots_move(self):
        assert Polynomial((1.0, -3.0, 2.0)).shift(1.0).coeffs == (1.0, -1.0, 0.0)

    @given(poly=poly_strategy(), r=st.floats(-10.0, 10.0, allow_nan=False))
    def test_round_trip(self, poly, r):
        there = poly.shift(r)
        back = there.shift(-r)
        # Float rounding of the intermediate coefficients is unavoidable, so
        # the bound scales with their magnitude.
        scale = max(1.0, max(abs(c) for c in there.coeffs))
        for a, b in zip(poly.coeffs, back.coeffs):
            assert abs(a - b) <= 1e-12 * scale

    @given(poly=poly_strategy(), r=st.floats(-3.0, 3.0, allow_nan=False),
           x_re=st.floats(-3.0, 3.0, allow_nan=False),
           x_im=st.floats(-3.0, 3.0, allow_nan=False))
    def test_matches_direct_evaluation(self, poly, r, x_re, x_im):
        x = complex(x_re, x_im)
        shifted_value = poly.shift(r).evaluate(x)
        direct_value = poly.evaluate(x + r)
        magnitude = sum(abs(c) * max(1.0, abs(x) + abs(r)) ** k
                        for k, c in enumerate(reversed(poly.coeffs)))
        assert abs(shifted_value - direct_value) <= 1e-10 * max(1.0, magnitude)


class TestDeflate:
    def test_cube_plus_one(self):
        q = Polynomial((1.0, 0.0, 0.0, 1.0)).deflate(-1.0)
        assert q.coeffs == (1 + 0j, -1 + 0j, 1 + 0j)

    def test_factored_quadratic(self):
        q = Polynomial((1.0, -3.0, 2.0)).deflate(1.0)
        assert q.coeffs == (1 + 0j, -2 + 0j)

    def test_complex_root(self):
        q = Polynomial((1.0, 0.0, 1.0)).deflate(1j)
        assert q.coeffs == (1 + 0j, 1j)

    def test_rejects_non_root(self):
        with pytest.raises(DeflationError):
            Polynomial((1.0, -3.0, 2.0)).deflate(5.0)

    @given(poly=poly_strategy(min_degree=2), index=st.integers(0, 3))
    def test_multiply_back(self, poly, index):
        from rootsplit import solve_aberth
        monic = poly.monic_normalize()
        if monic.degree < 2:
            return
        roots = solve_aberth(monic).roots
        root = roots[index % len(roots)]
        quotient = monic.deflate(root)
        rebuilt = quotient.multiply(ComplexPolynomial((1 + 0j, -root)))
        scale = max(1.0, max(abs(c) for c in monic.coeffs))
        for a, b in zip(rebuilt.coeffs, monic.coeffs):
            assert abs(a - b) <= 1e-9 * scale


class TestDerivative:
    def test_cubic(self):
        assert Polynomial((1.0, -6.0, 11.0, -6.0)).derivative().coeffs == (3.0, -12.0, 11.0)

    def test_linear(self):
        assert Polynomial((1.0, 0.0)).derivative().coeffs == (1.0,)

    def test_pure_power(self):
        assert Polynomial((1.0, 0.0, 0.0, 0.0, 0.0)).derivative().coeffs == (4.0, 0.0, 0.0, 0.0)

    def test_requires_degree_one(self):
        with pytest.raises(ValueError):
            Polynomial((5.0,)).derivative()


def test_polynomial_from_roots():
    poly = polynomial_from_roots([1.0, 2.0, 3.0])
    assert poly.coeffs == (1 + 0j, -6 + 0j, 11 + 0j, -6 + 0j)


def test_polynomial_rejects_empty():
    with pytest.raises(ValueError):
        Polynomial(())


def test_polynomial_rejects_non_finite():
    from rootsplit import NumericOverflowError
    with pytest.raises(NumericOverflowError):
        Polynomial((1.0, math.inf))
