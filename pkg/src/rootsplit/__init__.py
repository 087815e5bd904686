"""rootsplit: closed-form polynomial root solving for degrees 1-4.

The core solver rewrites a monic equation as a scaled difference of k-th
powers of two lower-degree constituents, determines the constituent
coefficients by matching, and reads the roots off the resulting factors.
Classical closed forms and a simultaneous-iteration method are included as
independent cross-checks.
"""

from .corpus import SplitMix64, random_monic_polynomial
from .numeric import (
    DEFAULT_TOLERANCES,
    NumericOverflowError,
    ToleranceConfig,
    all_nth_roots,
    is_effectively_real,
    principal_sqrt,
)
from .parsing import (
    ParseDiagnostic,
    PolynomialSyntaxError,
    UnsupportedVariableError,
    format_polynomial,
    parse_polynomial,
)
from .polynomial import (
    ComplexPolynomial,
    DeflationError,
    Polynomial,
    ZeroPolynomialError,
)
from .reference import (
    IterationSettings,
    NoConvergenceError,
    solve_aberth,
    solve_classical,
)
from .report import (
    DecompositionPlan,
    DecompositionTrace,
    Factorization,
    Method,
    SolveReport,
    SpecialCase,
    UnsupportedDegreeError,
)
from .solver import (
    SingularDecompositionError,
    decompose,
    plan_decomposition,
    solve_cubic_unified,
    solve_quadratic_unified,
    solve_quartic_unified,
    solve_unified,
)
from .verify import MatchReport, match_roots, residuals, vieta_check

__version__ = "0.1.0"

__all__ = [
    "ComplexPolynomial",
    "DecompositionPlan",
    "DecompositionTrace",
    "DEFAULT_TOLERANCES",
    "DeflationError",
    "Factorization",
    "IterationSettings",
    "MatchReport",
    "Method",
    "NoConvergenceError",
    "NumericOverflowError",
    "ParseDiagnostic",
    "Polynomial",
    "PolynomialSyntaxError",
    "SingularDecompositionError",
    "SolveReport",
    "SpecialCase",
    "SplitMix64",
    "ToleranceConfig",
    "UnsupportedDegreeError",
    "UnsupportedVariableError",
    "ZeroPolynomialError",
    "all_nth_roots",
    "decompose",
    "format_polynomial",
    "is_effectively_real",
    "match_roots",
    "parse_polynomial",
    "plan_decomposition",
    "principal_sqrt",
    "random_monic_polynomial",
    "residuals",
    "solve_aberth",
    "solve_classical",
    "solve_cubic_unified",
    "solve_quadratic_unified",
    "solve_quartic_unified",
    "solve_unified",
    "vieta_check",
]
