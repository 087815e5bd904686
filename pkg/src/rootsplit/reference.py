"""Independent root-finding baselines used to validate the main solver.

Two deliberately different routes:

* solve_classical - the textbook closed forms (quadratic formula, Cardano
  depressed cubic, Ferrari resolvent) with the usual numerical care.
* solve_aberth - a simultaneous Newton-with-repulsion iteration that works
  for any degree and never shares a formula with the closed forms.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

from .numeric import DEFAULT_TOLERANCES, ToleranceConfig, ensure_finite, principal_sqrt
from .polynomial import Polynomial
from .report import Method, SolveReport, UnsupportedDegreeError, build_report

_MACHINE_EPS = sys.float_info.epsilon
# Irrational slice of the circle; keeps start points off the real axis and
# off any root symmetry.
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


class NoConvergenceError(ArithmeticError):
    """Iteration budget exhausted; carries the best iterate found."""

    def __init__(self, message: str, roots: tuple[complex, ...], max_residual: float):
        super().__init__(message)
        self.roots = roots
        self.max_residual = max_residual


@dataclass(frozen=True)
class IterationSettings:
    max_iterations: int = 200
    convergence_tol: float = 1e-13
    initial_radius_factor: float = 1.0

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.convergence_tol > 0.0:
            raise ValueError("convergence_tol must be positive")
        if not self.initial_radius_factor > 0.0:
            raise ValueError("initial_radius_factor must be positive")


def _stable_monic_quadratic(b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of x^2 + bx + c, avoiding subtractive cancellation."""
    s = cmath.sqrt(b * b - 4.0 * c)
    # Pick the sign that makes |b + s| large.
    if (b.conjugate() * s).real < 0.0:
        s = -s
    t = -(b + s) / 2.0
    if t == 0:
        return complex(0.0), -b
    return t, c / t


def _principal_cbrt(z: complex) -> complex:
    if z == 0:
        return complex(0.0)
    r = abs(z) ** (1.0 / 3.0)
    theta = cmath.phase(z) / 3.0
    return complex(r * math.cos(theta), r * math.sin(theta))


def _cardano(a2: float, a1: float, a0: float) -> list[complex]:
    """Roots of x^3 + a2 x^2 + a1 x + a0 via the depressed cubic."""
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    if p == 0.0 and q == 0.0:
        return [complex(-shift)] * 3

    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    sd = cmath.sqrt(complex(disc))
    u3 = -q / 2.0 + sd
    v3 = -q / 2.0 - sd
    # Take the cube root of the larger-magnitude term, then force the
    # product constraint u*v = -p/3 instead of rooting both independently.
    big = u3 if abs(u3) >= abs(v3) else v3
    u = _principal_cbrt(big)
    v = _principal_cbrt(v3) if abs(u) == 0.0 else (-p / 3.0) / u

    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    omega2 = omega.conjugate()
    return [u + v - shift,
            omega * u + omega2 * v - shift,
            omega2 * u + omega * v - shift]


def _ferrari(a3: float, a2: float, a1: float, a0: float,
             tol: ToleranceConfig) -> list[complex]:
    """Roots of x^4 + a3 x^3 + a2 x^2 + a1 x + a0 via the resolvent cubic."""
    shift = a3 / 4.0
    p = a2 - 3.0 * a3 * a3 / 8.0
    q = a1 + a3 ** 3 / 8.0 - a3 * a2 / 2.0
    r = a0 - 3.0 * a3 ** 4 / 256.0 + a3 * a3 * a2 / 16.0 - a3 * a1 / 4.0

    if q == 0.0:  # even powers only: a quadratic in y^2
        z1, z2 = _stable_monic_quadratic(complex(p), complex(r))
        out = []
        for z in (z1, z2):
            s = cmath.sqrt(z)
            out.extend([s - shift, -s - shift])
        return out

    # m must satisfy 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0 so that the
    # depressed quartic splits as (y^2 + p/2 + m)^2 - (alpha*y - beta)^2.
    m_candidates = _cardano(p, p * p / 4.0 - r, -q * q / 8.0)
    scale = max(1.0, abs(p), abs(q), abs(r))
    real_ms = sorted(m.real for m in m_candidates
                     if abs(m.imag) <= tol.eps_real * max(1.0, abs(m)))
    positive = [m for m in real_ms if 2.0 * m > tol.eps_singular * scale]
    if positive:
        m = complex(min(positive))
    elif real_ms:
        # No usable positive root; continue with a complex square root.
        m = complex(max(real_ms, key=abs))
    else:
        m = max(m_candidates, key=lambda z: abs(z.real))
    alpha = cmath.sqrt(2.0 * m)
    beta = q / (2.0 * alpha)

    base = p / 2.0 + m
    y1, y2 = _stable_monic_quadratic(-alpha, base + beta)
    y3, y4 = _stable_monic_quadratic(alpha, base - beta)
    return [y1 - shift, y2 - shift, y3 - shift, y4 - shift]


def solve_classical(poly: Polynomial,
                    tol: ToleranceConfig = DEFAULT_TOLERANCES) -> SolveReport:
    """Textbook closed-form roots for degrees 1 through 4."""
    monic = poly.monic_normalize()
    n = monic.degree
    if n < 1 or n > 4:
        raise UnsupportedDegreeError(
            f"classical closed forms cover degrees 1-4, got degree {n}")
    a = monic.coeffs
    if n == 1:
        roots = [complex(-a[1])]
    elif n == 2:
        roots = list(_stable_monic_quadratic(complex(a[1]), complex(a[2])))
    elif n == 3:
        roots = _cardano(a[1], a[2], a[3])
    else:
        roots = _ferrari(a[1], a[2], a[3], a[4], tol)
    for z in roots:
        ensure_finite(z, "classical root")
    return build_report(monic, tuple(roots), Method.CLASSICAL)


def _horner_pair(coeffs: list[complex], x: complex) -> tuple[complex, complex]:
    """P(x) and P'(x) in one pass."""
    value = coeffs[0]
    deriv = complex(0.0)
    for a in coeffs[1:]:
        deriv = deriv * x + value
        value = value * x + a
    return value, deriv


def _residual_floor(abs_coeffs: list[float], x_abs: float) -> float:
    """Attainable |P(x)| noise level in double precision near a root."""
    acc = 0.0
    for a in abs_coeffs:
        acc = acc * x_abs + a
    return 4.0 * len(abs_coeffs) * _MACHINE_EPS * acc


def _aberth_attempt(coeffs: list[complex], abs_coeffs: list[float],
                    radius: float, settings: IterationSettings) -> tuple[list[complex], bool]:
    n = len(coeffs) - 1
    z = [radius * cmath.exp(1j * (_GOLDEN_ANGLE + 2.0 * math.pi * k / n))
         for k in range(n)]
    for _ in range(settings.max_iterations):
        all_settled = True
        for i in range(n):
            zi = z[i]
            value, deriv = _horner_pair(coeffs, zi)
            if abs(value) <= _residual_floor(abs_coeffs, abs(zi)):
                continue  # as converged as double precision allows
            if deriv == 0:
                # Stationary point; nudge off it deterministically.
                z[i] = zi * complex(1.0, 1e-6) + complex(1e-6, 1e-6)
                all_settled = False
                continue
            newton = value / deriv
            repulsion = complex(0.0)
            for j in range(n):
                if j != i and z[j] != zi:
                    repulsion += 1.0 / (zi - z[j])
            denom = 1.0 - newton * repulsion
            step = newton if denom == 0 else newton / denom
            z[i] = ensure_finite(zi - step, "iteration step")
            if abs(step) > settings.convergence_tol * (1.0 + abs(z[i])):
                all_settled = False
        if all_settled:
            return z, True
    return z, False


def solve_aberth(poly: Polynomial, settings: IterationSettings | None = None,
                 tol: ToleranceConfig = DEFAULT_TOLERANCES) -> SolveReport:
    """Simultaneous Newton-with-repulsion iteration; any degree >= 1.

    Start points sit on a circle of radius initial_radius_factor *
    (1 + max|a_j|), rotated by a fixed irrational angle.  A root counts as
    converged when its correction is below convergence_tol relatively or
    its residual reaches the double-precision noise floor.
    """
    if settings is None:
        settings = IterationSettings()
    monic = poly.monic_normalize()
    n = monic.degree
    if n < 1:
        raise UnsupportedDegreeError("need degree >= 1 to have roots")
    if n == 1:
        return build_report(monic, (complex(-monic.coeffs[1]),), Method.ABERTH)

    coeffs = [complex(c) for c in monic.coeffs]
    abs_coeffs = [abs(c) for c in monic.coeffs]
    base_radius = 1.0 + max(abs_coeffs[1:])

    attempt_roots: list[complex] = []
    for factor in (settings.initial_radius_factor, 2.0 * settings.initial_radius_factor):
        attempt_roots, converged = _aberth_attempt(
            coeffs, abs_coeffs, factor * base_radius, settings)
        if converged:
            return build_report(monic, tuple(attempt_roots), Method.ABERTH)
    best = tuple(attempt_roots)
    max_residual = max(abs(monic.evaluate(z)) for z in best)
    raise NoConvergenceError(
        f"no convergence within {settings.max_iterations} iterations "
        f"(best residual {max_residual:.3e})", best, max_residual)
