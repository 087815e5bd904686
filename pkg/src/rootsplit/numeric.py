"""Complex arithmetic helpers shared by every solver path.

Branch handling is the whole game here: the solvers need one fixed,
deterministic square-root branch plus explicit access to *all* n-th roots
when a formula leaves the branch open.  Non-finite values are treated as
contract violations, never as data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

_TWO_PI = 2.0 * math.pi


class NumericOverflowError(ArithmeticError):
    """A computation produced NaN or infinity."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical policy used across the package.

    eps_residual   acceptable |P(root)| relative to coefficient scale
    eps_singular   below this, a denominator counts as zero
    eps_match      root-set comparison tolerance
    eps_real       imaginary-part threshold for treating a value as real
    """

    eps_residual: float = 1e-8
    eps_singular: float = 1e-10
    eps_match: float = 1e-6
    eps_real: float = 1e-9

    def __post_init__(self) -> None:
        smallest = min(self.eps_residual, self.eps_singular,
                       self.eps_match, self.eps_real)
        if not smallest > 0.0:
            raise ValueError("all tolerances must be strictly positive")
        if self.eps_singular > self.eps_residual:
            raise ValueError("eps_singular must not exceed eps_residual")


DEFAULT_TOLERANCES = ToleranceConfig()


def ensure_finite(z: complex, context: str = "value") -> complex:
    """Return z unchanged, raising NumericOverflowError if it is not finite."""
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericOverflowError(f"non-finite {context}: {z!r}")
    return z


def principal_sqrt(z: complex) -> complex:
    """Square root with Re >= 0; when Re = 0 the branch with Im >= 0 is taken."""
    w = cmath.sqrt(complex(z))
    if w.real < 0.0 or (w.real == 0.0 and w.imag < 0.0):
        w = -w
    return ensure_finite(w, "square root")


def all_nth_roots(z: complex, n: int) -> list[complex]:
    """All n distinct n-th roots of z, ordered by argument in [0, 2*pi).

    z = 0 yields n copies of 0.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    z = complex(z)
    ensure_finite(z, "n-th root input")
    if z == 0:
        return [complex(0.0, 0.0)] * n
    magnitude = abs(z) ** (1.0 / n)
    ensure_finite(complex(magnitude), "n-th root magnitude")
    base = cmath.phase(z) / n  # phase(z) is in (-pi, pi]
    angled = []
    for k in range(n):
        theta = (base + _TWO_PI * k / n) % _TWO_PI
        root = complex(magnitude * math.cos(theta), magnitude * math.sin(theta))
        angled.append((theta, root))
    angled.sort(key=lambda item: item[0])
    return [root for _, root in angled]


def is_effectively_real(z: complex, scale: float,
                        tol: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """True when |Im z| is negligible against eps_real * max(1, scale)."""
    if scale < 0.0:
        raise ValueError("scale must be nonnegative")
    return abs(z.imag) <= tol.eps_real * max(1.0, scale)
