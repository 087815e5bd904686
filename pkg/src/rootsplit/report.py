"""Shared result types: the decomposition trace, factorizations, and the
solve report returned by every solver."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .polynomial import ComplexPolynomial, Polynomial


class UnsupportedDegreeError(ValueError):
    """Polynomial degree outside what the requested solver handles."""


class Method(str, enum.Enum):
    UNIFIED = "unified"
    CLASSICAL = "classical"
    ABERTH = "aberth"


class SpecialCase(str, enum.Enum):
    NONE = "none"
    LINEAR_CUBE = "linear-cube"
    DEPRESSED_SPECIAL = "depressed-special"
    BIQUADRATIC = "biquadratic"
    ZERO_CONSTANT = "zero-constant"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class DecompositionPlan:
    """Degrees used to rewrite a degree-n equation as a difference of
    k-th powers of two degree-m constituents."""

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.k * self.m != self.n:
            raise ValueError(f"k*m must equal n: {self.k}*{self.m} != {self.n}")
        if self.k <= 1:
            raise ValueError("k must exceed 1 for the split to be nontrivial")
        expected = self.n if self.n % 2 == 1 else self.n + 1
        if 2 * self.m + 1 != expected:
            raise ValueError(
                f"2m+1 must be {expected} for n={self.n}, got {2 * self.m + 1}")


@dataclass(frozen=True)
class DecompositionTrace:
    """Every intermediate produced while decomposing one polynomial.

    For the quadratic and cubic (m = 1) b and c hold the single constituent
    constants; for the quartic (m = 2) they hold (index 0, index 1) pairs.
    On special-case paths the constituent values are not defined and the
    placeholders are zero; branch_note says what actually happened.
    """

    plan: DecompositionPlan
    b: tuple[complex, ...]
    c: tuple[complex, ...]
    p: complex
    shift_applied: float = 0.0
    f1: complex | None = None
    f2: complex | None = None
    resolvent: Polynomial | None = None
    resolvent_roots: tuple[complex, ...] | None = None
    branch_note: str = ""
    special_case: SpecialCase = SpecialCase.NONE

    def __post_init__(self) -> None:
        if len(self.b) != self.plan.m or len(self.c) != self.plan.m:
            raise ValueError("b and c must each have one entry per constituent degree")


@dataclass(frozen=True)
class Factorization:
    """The two monic constituent factors and how well their product
    reproduces the monic input (max coefficient deviation)."""

    factor1: ComplexPolynomial
    factor2: ComplexPolynomial
    identity_residual: float


@dataclass(frozen=True)
class SolveReport:
    """Roots plus provenance for one solve."""

    input: Polynomial
    roots: tuple[complex, ...]
    method: Method
    max_residual: float
    trace: DecompositionTrace | None = None
    factorization: Factorization | None = None

    @property
    def special_case(self) -> SpecialCase:
        return self.trace.special_case if self.trace is not None else SpecialCase.NONE


def build_report(poly: Polynomial, roots: tuple[complex, ...], method: Method,
                 trace: DecompositionTrace | None = None,
                 factorization: Factorization | None = None) -> SolveReport:
    """Assemble a report, computing the residual over the given roots."""
    max_residual = max((abs(poly.evaluate(r)) for r in roots), default=0.0)
    return SolveReport(input=poly, roots=tuple(roots), method=method,
                       max_residual=max_residual, trace=trace,
                       factorization=factorization)
