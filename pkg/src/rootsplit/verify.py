"""Quantitative root-set checks: residuals, tolerance-aware multiset
matching, and coefficient consistency via elementary symmetric sums."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .polynomial import ComplexPolynomial, Polynomial, polynomial_from_roots


@dataclass(frozen=True)
class MatchReport:
    """Outcome of pairing computed roots against expected roots.

    pairs holds (computed index, expected index, distance) triples forming
    a perfect matching; max_distance is the largest pair distance.
    """

    pairs: tuple[tuple[int, int, float], ...]
    max_distance: float
    matched: bool


def residuals(poly: Polynomial | ComplexPolynomial,
              roots: Sequence[complex]) -> list[float]:
    """|P(x)| for each claimed root, in input order."""
    return [abs(poly.evaluate(x)) for x in roots]


def match_roots(computed: Sequence[complex], expected: Sequence[complex],
                tol: float) -> MatchReport:
    """Best perfect matching between two equal-size root sets.

    Exhaustive over permutations (intended for root sets of size <= 4).
    The matching minimizes the largest pair distance first, total distance
    second, so `matched` is decided by the best achievable bottleneck.
    """
    if len(computed) != len(expected):
        raise ValueError(
            f"root-count mismatch: {len(computed)} computed vs {len(expected)} expected")
    n = len(computed)
    if n == 0:
        return MatchReport(pairs=(), max_distance=0.0, matched=True)

    best_key: tuple[float, float] | None = None
    best_perm: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(n)):
        distances = [abs(computed[i] - expected[perm[i]]) for i in range(n)]
        key = (max(distances), sum(distances))
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm
    assert best_perm is not None and best_key is not None
    pairs = tuple((i, best_perm[i], abs(computed[i] - expected[best_perm[i]]))
                  for i in range(n))
    return MatchReport(pairs=pairs, max_distance=best_key[0],
                       matched=best_key[0] <= tol)


def vieta_check(poly: Polynomial, roots: Sequence[complex]) -> list[float]:
    """Per-order deviation between the elementary symmetric functions of the
    roots and the monic polynomial's coefficients.

    Entry k-1 (k = 1..N) is |e_k(roots) - (-1)^k a_{N-k}|, i.e. the absolute
    coefficient error of the re-expanded product of linear factors.
    """
    if abs(poly.coeffs[0] - 1.0) > 1e-12:
        raise ValueError("vieta_check requires a monic polynomial")
    if len(roots) != poly.degree:
        raise ValueError(
            f"root-count mismatch: degree {poly.degree} but {len(roots)} roots")
    expanded = polynomial_from_roots(roots)
    return [abs(expanded.coeffs[k] - poly.coeffs[k])
            for k in range(1, poly.degree + 1)]
