"""Factorial-function kernels.

The whole operator family reduces, on integer-step lattices, to the
normalized gamma-ratio weight

    gbinom(alpha, k) = Gamma(k + alpha) / (Gamma(k + 1) Gamma(alpha))
                     = prod_{j=1..k} (alpha + j - 1) / j,

which is a generalized binomial coefficient C(alpha + k - 1, k). The product
form is exact for rational alpha and never materializes a bare Gamma value,
which is what makes exact-rational verification possible. Falling and rising
factorials at arbitrary real points are float-only and go through log-gamma
with explicit sign bookkeeping.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .scalars import DomainError


class PoleError(ArithmeticError):
    """A gamma pole in the numerator with no canceling denominator pole."""


@lru_cache(maxsize=4096)
def _prefix_cached(alpha, kmax: int, is_float: bool):
    out = [1.0] if is_float else [Fraction(1)]
    v = out[0]
    for j in range(1, kmax + 1):
        v = v * (alpha + j - 1) / j
        out.append(v)
    return tuple(out)


def _gbinom_prefix(alpha, kmax: int):
    # one shared prefix per (alpha, kmax); Fraction alpha stays exact. The
    # mode flag keeps float and Fraction entries apart: equal values of the
    # two types are hash-equal and would otherwise share a cache slot.
    return _prefix_cached(alpha, kmax, isinstance(alpha, float))


def gbinom(alpha, k: int):
    """Generalized binomial weight C(alpha + k - 1, k).

    Exact when alpha is a Fraction or int, float when alpha is a float.
    k must be a nonnegative integer.
    """
    if k != int(k) or k < 0:
        raise DomainError(f"gbinom needs integer k >= 0, got {k}")
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    return _gbinom_prefix(alpha, int(k))[int(k)]


def gbinom_weights(alpha, count: int):
    """The kernel table (gbinom(alpha, 0), ..., gbinom(alpha, count - 1))."""
    if count < 1:
        raise DomainError("count must be >= 1")
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    return _gbinom_prefix(alpha, count - 1)


def _signed_loggamma(x: float) -> tuple[int, float]:
    # sign of Gamma(x) together with log|Gamma(x)|; x must not be a pole
    if x > 0:
        return 1, math.lgamma(x)
    if x == int(x):
        raise PoleError(f"gamma pole at {x}")
    sign = -1 if math.floor(x) % 2 else 1
    return sign, math.lgamma(x)


def _gamma_ratio(num: float, den: float) -> float:
    """Gamma(num)/Gamma(den) with pole conventions.

    A pole in the denominator only yields 0; a pole in the numerator only is
    an error; a double pole is not resolved here.
    """
    num_pole = num <= 0 and num == int(num)
    den_pole = den <= 0 and den == int(den)
    if num_pole and den_pole:
        raise PoleError(f"unresolved gamma poles at {num} and {den}")
    if den_pole:
        return 0.0
    if num_pole:
        raise PoleError(f"gamma pole at {num}")
    sn, ln = _signed_loggamma(num)
    sd, ld = _signed_loggamma(den)
    return sn * sd * math.exp(ln - ld)


def falling_factorial(t, alpha) -> float:
    """t^(alpha) = Gamma(t+1)/Gamma(t+1-alpha), float evaluation.

    Division at a denominator pole yields zero. A numerator pole is resolved
    through the finite product t(t-1)...(t-alpha+1) when alpha is a
    nonnegative integer, and is a PoleError otherwise.
    """
    t, alpha = float(t), float(alpha)
    num, den = t + 1.0, t + 1.0 - alpha
    if num <= 0 and num == int(num):
        if alpha >= 0 and alpha == int(alpha):
            prod = 1.0
            for j in range(int(alpha)):
                prod *= t - j
            return prod
        raise PoleError(f"gamma pole at t+1 = {num} with non-integer order")
    return _gamma_ratio(num, den)


def rising_factorial(t, alpha) -> float:
    """t^{overline alpha} = Gamma(t+alpha)/Gamma(t), with 0^{overline alpha} = 0.

    Negative-integer t is excluded from the definition and raises.
    """
    t, alpha = float(t), float(alpha)
    if t == 0.0:
        return 0.0
    if t < 0 and t == int(t):
        raise DomainError(f"rising factorial undefined at t = {t}")
    return _gamma_ratio(t + alpha, t)


def kernel_value(alpha, k: int):
    """gbinom extended by 0 for k < 0 (the 0^{overline ...} = 0 convention)."""
    if k < 0:
        return 0.0 if isinstance(alpha, float) else Fraction(0)
    return gbinom(alpha, k)


def falling_exact(t: Fraction, m: int) -> Fraction:
    """Integer-order falling factorial t(t-1)...(t-m+1), exact."""
    if m < 0:
        raise DomainError("integer falling factorial needs m >= 0")
    out = Fraction(1)
    for j in range(m):
        out *= t - j
    return out


def rising_exact(t: Fraction, m: int) -> Fraction:
    """Integer-order rising factorial t(t+1)...(t+m-1), exact."""
    if m < 0:
        raise DomainError("integer rising factorial needs m >= 0")
    out = Fraction(1)
    for j in range(m):
        out *= t + j
    return out
