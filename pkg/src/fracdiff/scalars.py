"""Dual-mode scalar support.

Exact mode uses :class:`fractions.Fraction` (always lowest terms, positive
denominator -- the stdlib guarantees both); float mode uses plain ``float``.
The two modes never mix silently: operations that combine values check the
mode up front and raise :class:`ModeError` on a mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

EXACT = "exact"
FLOAT = "float"


class ModeError(TypeError):
    """Raised when exact and float values are combined."""


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def mode_of(x) -> str:
    if isinstance(x, float):
        return FLOAT
    if isinstance(x, (int, Fraction)):
        return EXACT
    raise TypeError(f"not a scalar: {x!r}")


def common_mode(*values) -> str:
    modes = {mode_of(v) for v in values}
    if len(modes) != 1:
        raise ModeError(f"mixed scalar modes {sorted(modes)}")
    return modes.pop()


def zero(mode: str):
    return Fraction(0) if mode == EXACT else 0.0


def coerce(x, mode: str):
    """Bring x into the given mode. Exact -> float is allowed, float -> exact is not."""
    if mode == FLOAT:
        return float(x)
    if mode_of(x) == FLOAT:
        raise ModeError("cannot use a float value in exact mode")
    return Fraction(x)


def is_integer_valued(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return float(x).is_integer()


def ceil_scalar(x) -> int:
    if isinstance(x, Fraction):
        return -((-x.numerator) // x.denominator)
    return math.ceil(x)


def parse_number(text: str):
    """Parse 'p/q', an integer, or a decimal/float literal.

    Rational forms come back as Fraction, anything with '.', 'e', 'inf' or
    'nan' as float.
    """
    s = text.strip()
    if "/" in s:
        return Fraction(s)
    low = s.lower()
    if "." in s or "e" in low or "inf" in low or "nan" in low:
        return float(s)
    return Fraction(int(s))


def parse_rational(text: str) -> Fraction:
    """Parse a number that must be exactly representable (p/q, int, or finite decimal)."""
    v = parse_number(text)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise DomainError(f"not a rational value: {text!r}")
        return Fraction(text.strip())
    return v


def format_number(x) -> str:
    """Shortest round-trip form: Fractions as p/q (or p), floats via repr."""
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


@dataclass(frozen=True)
class Order:
    """A fractional order alpha > 0 together with n = ceil(alpha).

    n is the number of integer differences stacked on top of the order
    (n - alpha) sum when forming a fractional difference; for integer alpha
    it equals alpha itself.
    """

    alpha: Fraction | float

    def __post_init__(self):
        mode_of(self.alpha)  # type check
        if not self.alpha > 0:
            raise DomainError(f"order must be positive, got {self.alpha}")
        if mode_of(self.alpha) == EXACT and isinstance(self.alpha, int):
            object.__setattr__(self, "alpha", Fraction(self.alpha))

    @property
    def n(self) -> int:
        return ceil_scalar(self.alpha)

    @property
    def is_integer(self) -> bool:
        return is_integer_valued(self.alpha)

    @property
    def mode(self) -> str:
        return mode_of(self.alpha)

    def __str__(self):
        return format_number(self.alpha)
