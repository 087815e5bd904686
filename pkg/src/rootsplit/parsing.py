"""Parse and format univariate polynomial expressions in x.

Accepted grammar (whitespace between tokens is ignored):

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := number ['*'] [power] | power
    power  := 'x' ['^' uint]
    number := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]
             | '.' digits [('e'|'E') ['+'|'-'] digits]

Repeated powers accumulate ("x + x" is 2x).  Only the variable name "x"
is recognized.  Parentheses are not supported; inputs are expected to be
expanded polynomials such as "x^3 - 2.5x^2 + 3x + 11".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .polynomial import Polynomial

_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_UINT_RE = re.compile(r"\d+")


@dataclass(frozen=True)
class ParseDiagnostic:
    position: int
    message: str


class PolynomialSyntaxError(ValueError):
    """Input text is not a valid polynomial expression."""

    def __init__(self, diagnostic: ParseDiagnostic):
        self.diagnostic = diagnostic
        super().__init__(f"{diagnostic.message} (at position {diagnostic.position})")


class UnsupportedVariableError(PolynomialSyntaxError):
    """A variable other than x appeared in the input."""


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos]

    def fail(self, message: str, position: int | None = None) -> None:
        pos = self.pos if position is None else position
        raise PolynomialSyntaxError(ParseDiagnostic(min(pos, len(self.text)), message))


def _parse_term(scanner: _Scanner) -> tuple[float, int]:
    """One term: coefficient and power of x (either part may be implicit)."""
    text = scanner.text
    coefficient = None
    match = _NUMBER_RE.match(text, scanner.pos)
    if match:
        coefficient = float(match.group())
        if not math.isfinite(coefficient):
            scanner.fail("coefficient overflows double precision")
        scanner.pos = match.end()
        scanner.skip_ws()
        if not scanner.at_end() and scanner.peek() == "*":
            scanner.pos += 1
            scanner.skip_ws()
            if scanner.at_end() or not scanner.peek().isalpha():
                scanner.fail("expected a variable after '*'")

    power = 0
    if not scanner.at_end() and scanner.peek().isalpha():
        if scanner.peek() != "x":
            raise UnsupportedVariableError(ParseDiagnostic(
                scanner.pos,
                f"unsupported variable {scanner.peek()!r}; only 'x' is accepted"))
        scanner.pos += 1
        power = 1
        scanner.skip_ws()
        if not scanner.at_end() and scanner.peek() == "^":
            caret = scanner.pos
            scanner.pos += 1
            scanner.skip_ws()
            match = _UINT_RE.match(text, scanner.pos)
            if not match:
                scanner.fail("malformed exponent: expected a nonnegative integer",
                             caret + 1)
            scanner.pos = match.end()
            if not scanner.at_end() and scanner.peek() == ".":
                scanner.fail("malformed exponent: expected a nonnegative integer",
                             caret + 1)
            power = int(match.group())

    if coefficient is None and power == 0:
        scanner.fail("expected a number or 'x'")
    return (1.0 if coefficient is None else coefficient), power


def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression into a coefficient vector, highest power first.

    The result is not normalized: "x - x + 1" parses to [0, 1].
    """
    scanner = _Scanner(text)
    scanner.skip_ws()
    if scanner.at_end():
        scanner.fail("empty input", 0)

    powers: dict[int, float] = {}
    sign = 1.0
    if scanner.peek() in "+-":
        sign = -1.0 if scanner.peek() == "-" else 1.0
        scanner.pos += 1
        scanner.skip_ws()

    while True:
        coefficient, power = _parse_term(scanner)
        powers[power] = powers.get(power, 0.0) + sign * coefficient
        scanner.skip_ws()
        if scanner.at_end():
            break
        op = scanner.peek()
        if op not in "+-":
            scanner.fail(f"expected '+' or '-' between terms, found {op!r}")
        sign = -1.0 if op == "-" else 1.0
        scanner.pos += 1
        scanner.skip_ws()
        if scanner.at_end():
            scanner.fail("expected a term after the operator")

    degree = max(powers)
    coeffs = tuple(powers.get(k, 0.0) for k in range(degree, -1, -1))
    return Polynomial(coeffs)


def format_polynomial(poly: Polynomial, sig_digits: int = 12) -> str:
    """Canonical descending-power rendering; zero terms are elided.

    At sig_digits = 17 the output re-parses to the exact same coefficients.
    """
    if not 1 <= sig_digits <= 17:
        raise ValueError("sig_digits must be between 1 and 17")
    degree = poly.degree
    parts: list[str] = []
    for k, coefficient in zip(range(degree, -1, -1), poly.coeffs):
        if coefficient == 0.0:
            continue
        magnitude = format(abs(coefficient), f".{sig_digits}g")
        if k == 0:
            body = magnitude
        else:
            variable = "x" if k == 1 else f"x^{k}"
            body = variable if magnitude == "1" else f"{magnitude}{variable}"
        if not parts:
            parts.append(body if coefficient > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coefficient > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)
