import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootsplit import (
    Polynomial,
    PolynomialSyntaxError,
    UnsupportedVariableError,
    format_polynomial,
    parse_polynomial,
)

CUBIC_TEXT = "x^3 - 2.049888x^2 + 3.1010205x + 11.313708"
QUARTIC_TEXT = "x^4 + 2.0533927x^3 - 2.8917903x^2 + 7.6758959x + 29.5803989"
QUADRATIC_TEXT = "x^2 - 3x + 2"


class TestParse:
    def test_published_cubic(self):
        assert parse_polynomial(CUBIC_TEXT).coeffs == (
            1.0, -2.049888, 3.1010205, 11.313708)

    def test_published_quartic(self):
        assert parse_polynomial(QUARTIC_TEXT).coeffs == (
            1.0, 2.0533927, -2.8917903, 7.6758959, 29.5803989)

    def test_bare_power(self):
        assert parse_polynomial("x^2").coeffs == (1.0, 0.0, 0.0)

    def test_accumulation(self):
        assert parse_polynomial("x + x").coeffs == (2.0, 0.0)

    def test_cancellation_keeps_degree(self):
        assert parse_polynomial("x - x + 1").coeffs == (0.0, 1.0)

    @pytest.mark.parametrize("text", ["3x", "3*x", "3 * x", "3 x"])
    def test_multiplication_forms(self, text):
        assert parse_polynomial(text).coeffs == (3.0, 0.0)

    def test_leading_sign(self):
        assert parse_polynomial("-x^2 + 1").coeffs == (-1.0, 0.0, 1.0)
        assert parse_polynomial("+x").coeffs == (1.0, 0.0)

    def test_scientific_coefficients(self):
        assert parse_polynomial("2e-3x^2 + 1E2").coeffs == (2e-3, 0.0, 100.0)

    def test_constant_only(self):
        assert parse_polynomial("5").coeffs == (5.0,)

    def test_whitespace_insensitive(self):
        assert parse_polynomial("  x ^ 2 -  3 x+2 ").coeffs == (1.0, -3.0, 2.0)


class TestParseErrors:
    def test_empty(self):
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_polynomial("   ")
        assert info.value.diagnostic.position == 0

    def test_unknown_variable(self):
        with pytest.raises(UnsupportedVariableError) as info:
            parse_polynomial("y^2")
        assert info.value.diagnostic.position == 0

    def test_unknown_variable_later(self):
        with pytest.raises(UnsupportedVariableError) as info:
            parse_polynomial("x^2 + 3t")
        assert info.value.diagnostic.position == 7

    @pytest.mark.parametrize("text", ["x^", "x^-1", "x^2.5", "x ^ +2"])
    def test_malformed_exponent(self, text):
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_polynomial(text)
        assert "exponent" in str(info.value)

    def test_dangling_operator(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x +")

    def test_unknown_character(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x $ 2")

    def test_star_without_variable(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("3 *")

    def test_juxtaposed_numbers(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("3 4")

    def test_coefficient_overflow(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("1e999x")

    @given(st.text(max_size=30))
    def test_total_with_valid_positions(self, text):
        try:
            parse_polynomial(text)
        except PolynomialSyntaxError as exc:
            assert 0 <= exc.diagnostic.position <= len(text)


class TestFormat:
    def test_quadratic(self):
        assert format_polynomial(Polynomial((1.0, -3.0, 2.0))) == "x^2 - 3x + 2"

    def test_zero_term_elision(self):
        assert format_polynomial(Polynomial((1.0, 0.0, 0.0, 1.0))) == "x^3 + 1"

    def test_simple_linear(self):
        assert format_polynomial(Polynomial((1.0, 0.5))) == "x + 0.5"

    def test_negative_leading(self):
        assert format_polynomial(Polynomial((-1.0, 0.0))) == "-x"

    def test_all_zero(self):
        assert format_polynomial(Polynomial((0.0, 0.0))) == "0"

    def test_sig_digit_bounds(self):
        with pytest.raises(ValueError):
            format_polynomial(Polynomial((1.0,)), 0)
        with pytest.raises(ValueError):
            format_polynomial(Polynomial((1.0,)), 18)


nonzero_lead = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False,
                         allow_infinity=False).filter(lambda v: v != 0.0)
any_coeff = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False,
                      allow_infinity=False)


@given(lead=nonzero_lead, rest=st.lists(any_coeff, max_size=4))
def test_round_trip_exact_at_17_digits(lead, rest):
    poly = Polynomial((lead, *rest))
    assert parse_polynomial(format_polynomial(poly, 17)).coeffs == poly.coeffs
