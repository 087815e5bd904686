"""Polynomial data model and elementary transformations.

Coefficients are always stored highest power first, so ``Polynomial((1, -3, 2))``
is x^2 - 3x + 2.  Values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numeric import (
    DEFAULT_TOLERANCES,
    NumericOverflowError,
    ToleranceConfig,
    ensure_finite,
)


class ZeroPolynomialError(ValueError):
    """All coefficients are zero; degree and roots are undefined."""


class DeflationError(ValueError):
    """Attempted to divide out a value that is not a root."""


def _horner(coeffs: Sequence[complex], x: complex) -> complex:
    acc = complex(0.0, 0.0)
    for a in coeffs:
        acc = acc * x + a
    return ensure_finite(acc, "polynomial evaluation")


def _taylor_shift(coeffs: Sequence[complex], r: complex) -> tuple[complex, ...]:
    # Repeated synthetic division by (x - r); the remainders are the shifted
    # coefficients, constant term first.
    work = list(coeffs)
    n = len(work)
    out = []
    for k in range(n):
        for i in range(1, n - k):
            work[i] = work[i] + work[i - 1] * r
        out.append(work[n - 1 - k])
    return tuple(reversed(out))


def _synthetic_divide(coeffs: Sequence[complex],
                      root: complex) -> tuple[tuple[complex, ...], complex]:
    quotient = [complex(coeffs[0])]
    for a in coeffs[1:]:
        quotient.append(a + root * quotient[-1])
    return tuple(quotient[:-1]), quotient[-1]


@dataclass(frozen=True)
class Polynomial:
    """Real-coefficient polynomial, highest power first."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        converted = tuple(float(c) for c in self.coeffs)
        for c in converted:
            if not math.isfinite(c):
                raise NumericOverflowError(f"non-finite coefficient: {c!r}")
        object.__setattr__(self, "coeffs", converted)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficient_scale(self) -> float:
        return max(1.0, max(abs(c) for c in self.coeffs))

    def evaluate(self, x: complex) -> complex:
        return _horner(self.coeffs, complex(x))

    def monic_normalize(self) -> "Polynomial":
        """Strip leading zeros, then scale so the leading coefficient is 1."""
        coeffs = list(self.coeffs)
        while coeffs and coeffs[0] == 0.0:
            coeffs.pop(0)
        if not coeffs:
            raise ZeroPolynomialError("the zero polynomial cannot be normalized")
        lead = coeffs[0]
        if lead == 1.0:
            return Polynomial(tuple(coeffs))
        return Polynomial(tuple(c / lead for c in coeffs))

    def shift(self, r: float) -> "Polynomial":
        """Q with Q(x) = P(x + r), by synthetic Taylor shift."""
        return Polynomial(_taylor_shift(self.coeffs, float(r)))

    def deflate(self, root: complex,
                tol: ToleranceConfig = DEFAULT_TOLERANCES) -> "ComplexPolynomial":
        """Divide out (x - root).  root must actually be a root of self."""
        if self.degree < 1:
            raise DeflationError("cannot deflate a constant")
        residual = abs(self.evaluate(root))
        if residual > tol.eps_residual * self.coefficient_scale:
            raise DeflationError(
                f"|P({root!r})| = {residual:.3e} is too large for deflation")
        quotient, _ = _synthetic_divide([complex(c) for c in self.coeffs], root)
        return ComplexPolynomial(quotient)

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            raise ValueError("derivative requires degree >= 1")
        n = self.degree
        return Polynomial(tuple(c * (n - i) for i, c in enumerate(self.coeffs[:-1])))


@dataclass(frozen=True)
class ComplexPolynomial:
    """Complex-coefficient polynomial, highest power first."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        converted = tuple(complex(c) for c in self.coeffs)
        for c in converted:
            ensure_finite(c, "coefficient")
        object.__setattr__(self, "coeffs", converted)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: complex) -> complex:
        return _horner(self.coeffs, complex(x))

    def shift(self, r: complex) -> "ComplexPolynomial":
        return ComplexPolynomial(_taylor_shift(self.coeffs, complex(r)))

    def multiply(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        out = [complex(0.0, 0.0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ComplexPolynomial(tuple(out))


def as_complex_polynomial(poly: Polynomial | ComplexPolynomial) -> ComplexPolynomial:
    if isinstance(poly, ComplexPolynomial):
        return poly
    return ComplexPolynomial(tuple(complex(c) for c in poly.coeffs))


def polynomial_from_roots(roots: Iterable[complex]) -> ComplexPolynomial:
    """Monic polynomial with the given roots."""
    result = ComplexPolynomial((complex(1.0),))
    for root in roots:
        result = result.multiply(ComplexPolynomial((complex(1.0), -complex(root))))
    return result


# Operation-style aliases; the methods above are the implementation.

def evaluate(poly: Polynomial | ComplexPolynomial, x: complex) -> complex:
    return poly.evaluate(x)


def monic_normalize(poly: Polynomial) -> Polynomial:
    return poly.monic_normalize()


def shift(poly: Polynomial, r: float) -> Polynomial:
    return poly.shift(r)


def deflate(poly: Polynomial, root: complex,
            tol: ToleranceConfig = DEFAULT_TOLERANCES) -> ComplexPolynomial:
    return poly.deflate(root, tol)


def derivative(poly: Polynomial) -> Polynomial:
    return poly.derivative()
