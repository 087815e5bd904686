import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootsplit import (
    NumericOverflowError,
    ToleranceConfig,
    all_nth_roots,
    is_effectively_real,
    principal_sqrt,
)
from rootsplit.numeric import ensure_finite

OMEGA = cmath.exp(2j * math.pi / 3)

finite_components = st.floats(min_value=-1e150, max_value=1e150,
                              allow_nan=False, allow_infinity=False,
                              allow_subnormal=False)


class TestPrincipalSqrt:
    def test_positive_real(self):
        assert principal_sqrt(complex(4.0)) == 2.0

    def test_negative_real_gives_positive_imag(self):
        assert principal_sqrt(complex(-1.0)) == 1j

    def test_two_i(self):
        assert abs(principal_sqrt(2j) - (1 + 1j)) < 1e-15

    def test_negative_real_with_negative_zero_imag(self):
        # The tie (Re = 0) must resolve to Im >= 0 on both sides of the cut.
        w = principal_sqrt(complex(-4.0, -0.0))
        assert w == 2j

    @given(re=finite_components, im=finite_components)
    def test_square_reproduces_input(self, re, im):
        z = complex(re, im)
        w = principal_sqrt(z)
        assert w.real >= 0.0
        if w.real == 0.0:
            assert w.imag >= 0.0
        assert abs(w * w - z) <= 4 * 2.220446049250313e-16 * max(abs(z), 5e-324)


class TestAllNthRoots:
    def test_cube_roots_of_eight(self):
        roots = all_nth_roots(complex(8.0), 3)
        expected = [2.0 + 0j, 2.0 * OMEGA, 2.0 * OMEGA ** 2]
        for got, want in zip(roots, expected):
            assert abs(got - want) < 1e-12

    def test_square_roots_of_minus_one(self):
        roots = all_nth_roots(complex(-1.0), 2)
        assert abs(roots[0] - 1j) < 1e-15
        assert abs(roots[1] + 1j) < 1e-15

    def test_cube_roots_of_unity(self):
        roots = all_nth_roots(complex(1.0), 3)
        expected = [1.0 + 0j, OMEGA, OMEGA ** 2]
        for got, want in zip(roots, expected):
            assert abs(got - want) < 1e-15

    def test_zero(self):
        assert all_nth_roots(complex(0.0), 3) == [0j, 0j, 0j]

    def test_ordering_by_argument(self):
        roots = all_nth_roots(complex(-8.0), 3)
        args = [cmath.phase(z) % (2 * math.pi) for z in roots]
        assert args == sorted(args)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            all_nth_roots(complex(1.0), 0)

    @given(re=st.floats(-1e100, 1e100, allow_nan=False),
           im=st.floats(-1e100, 1e100, allow_nan=False),
           n=st.sampled_from([2, 3]))
    def test_powers_and_product(self, re, im, n):
        z = complex(re, im)
        roots = all_nth_roots(z, n)
        assert len(roots) == n
        bound = 1e-12 * max(1.0, abs(z))
        for w in roots:
            assert abs(w ** n - z) <= bound
        product = 1.0 + 0j
        for w in roots:
            product *= w
        assert abs(product - (-1) ** (n + 1) * z) <= bound


class TestEffectivelyReal:
    def test_plain_real(self):
        assert is_effectively_real(complex(3.0), 1.0)

    def test_tiny_imag(self):
        assert is_effectively_real(complex(3.0, 1e-12), 1.0)

    def test_large_imag(self):
        assert not is_effectively_real(complex(3.0, 0.1), 1.0)

    def test_scale_relative(self):
        assert is_effectively_real(complex(0.0, 5e-9), 1e4)
        assert not is_effectively_real(complex(0.0, 5e-9), 1.0)

    def test_negative_scale_rejected(self):
        with pytest.raises(ValueError):
            is_effectively_real(complex(1.0), -1.0)


class TestToleranceConfig:
    def test_defaults(self):
        tol = ToleranceConfig()
        assert tol.eps_residual == 1e-8
        assert tol.eps_singular == 1e-10
        assert tol.eps_match == 1e-6
        assert tol.eps_real == 1e-9

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ToleranceConfig(eps_match=0.0)

    def test_rejects_singular_above_residual(self):
        with pytest.raises(ValueError):
            ToleranceConfig(eps_residual=1e-12, eps_singular=1e-8)


def test_ensure_finite_passes_normal_values():
    assert ensure_finite(complex(1.0, -2.0)) == complex(1.0, -2.0)


@pytest.mark.parametrize("bad", [complex(float("inf"), 0.0),
                                 complex(0.0, float("nan"))])
def test_ensure_finite_raises(bad):
    with pytest.raises(NumericOverflowError):
        ensure_finite(bad)
