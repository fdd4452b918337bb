"""The eight fractional operators and the integer difference operators.

Every fractional sum is a lower-triangular convolution against the gbinom
kernel on the function's own lattice:

    left sums    out(anchor + m) = sum_{k} gbinom(alpha, m - k) f(anchor + k)
    right sums   out(anchor - m) = sum_{k} gbinom(alpha, m - k) f(anchor - k)

with k starting at 0 for the delta sums (and the inclusive-base nabla
convention) and at 1 for the standard nabla sums, whose value at the anchor
is the empty sum 0. Fractional differences stack n = ceil(alpha) integer
differences on top of the order (n - alpha) sum; the sum is first extended
by n conventional zeros on the base side so the difference is defined on
the widest window the stored data allows.

Exact mode runs the O(N^2) reference summation in Fraction arithmetic;
float mode dispatches to the selected convolution backend after an exact
cross-check (see tests) guaranteed both paths agree.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _accel
from .grid import LEFT, RIGHT, GridFunction, WindowError
from .kernels import gbinom_weights
from .scalars import EXACT, FLOAT, ModeError, Order, ceil_scalar, mode_of

STANDARD = "standard"
INCLUSIVE = "inclusive-base"


def _order_value(alpha, mode: str):
    """Kernel-order value matched to the function's mode.

    Exact functions require an exactly representable order; float functions
    take the float image of whatever was given.
    """
    if isinstance(alpha, Order):
        alpha = alpha.alpha
    if mode == FLOAT:
        return float(alpha)
    if mode_of(alpha) == FLOAT:
        raise ModeError("exact-mode function with float order")
    return Fraction(alpha)


def _convolve(weights, values, mode: str):
    if mode == EXACT:
        out = []
        for i in range(len(values)):
            acc = Fraction(0)
            for k in range(i + 1):
                acc += weights[i - k] * values[k]
            out.append(acc)
        return tuple(out)
    res = _accel.lower_convolve(
        np.asarray(weights, dtype=np.float64), np.asarray(values, dtype=np.float64)
    )
    return tuple(float(x) for x in res)


# ---------------------------------------------------------------------------
# integer-order differences

def delta_diff(f: GridFunction, m: int = 1, signed: bool = False) -> GridFunction:
    """m-fold forward difference; signed multiplies by (-1)^m.

    On a left lattice the anchor is unchanged; on a right lattice it moves
    down by m (the forward difference at t needs the point above t).
    """
    return _int_diff(f, m, forward=True, signed=signed)


def nabla_diff(f: GridFunction, m: int = 1, signed: bool = False) -> GridFunction:
    """m-fold backward difference; signed multiplies by (-1)^m.

    On a left lattice the anchor moves up by m; on a right lattice it is
    unchanged.
    """
    return _int_diff(f, m, forward=False, signed=signed)


def _int_diff(f: GridFunction, m: int, forward: bool, signed: bool) -> GridFunction:
    if m < 0:
        raise ValueError("difference order must be >= 0")
    if m >= 1 and len(f) <= m:
        raise WindowError(f"window of {len(f)} points too short for {m} differences")
    g = f
    for _ in range(m):
        vals = g.values
        if g.orientation == LEFT:
            d = tuple(vals[i + 1] - vals[i] for i in range(len(vals) - 1))
            base = g.base if forward else g.base + 1
        else:
            d = tuple(vals[i] - vals[i + 1] for i in range(len(vals) - 1))
            base = g.base - 1 if forward else g.base
        g = GridFunction(base, g.orientation, d)
    if signed and m % 2 == 1:
        g = g.with_values(tuple(-v for v in g.values))
    return g


# ---------------------------------------------------------------------------
# the four fractional sums

def nabla_left_sum(f: GridFunction, alpha, convention: str = STANDARD) -> GridFunction:
    """Nabla left fractional sum on the function's own base a.

    Standard convention sums from a+1 (value 0 at a by the empty-sum
    convention); the inclusive-base convention starts the sum at a itself,
    which is what the left dual identities require.
    """
    _check_orientation(f, LEFT, "nabla_left_sum")
    return _nabla_sum(f, alpha, convention)


def nabla_right_sum(f: GridFunction, alpha) -> GridFunction:
    """Nabla right fractional sum on the function's own base b (0 at b)."""
    _check_orientation(f, RIGHT, "nabla_right_sum")
    return _nabla_sum(f, alpha, STANDARD)


def delta_left_sum(f: GridFunction, alpha) -> GridFunction:
    """Delta left fractional sum, mapping base a to base a + alpha."""
    _check_orientation(f, LEFT, "delta_left_sum")
    return _delta_sum(f, alpha)


def delta_right_sum(f: GridFunction, alpha) -> GridFunction:
    """Delta right fractional sum, mapping base b to base b - alpha."""
    _check_orientation(f, RIGHT, "delta_right_sum")
    return _delta_sum(f, alpha)


def _check_orientation(f: GridFunction, want: str, name: str):
    if f.orientation != want:
        raise ValueError(f"{name} needs a {want}-oriented function")


def _nabla_sum(f: GridFunction, alpha, convention: str) -> GridFunction:
    if convention not in (STANDARD, INCLUSIVE):
        raise ValueError(f"unknown convention {convention!r}")
    if convention == INCLUSIVE and f.orientation != LEFT:
        raise ValueError("the inclusive-base convention applies to the nabla left sum only")
    mode = f.mode
    a = _order_value(alpha, mode)
    w = gbinom_weights(a, len(f))
    if convention == INCLUSIVE:
        vals = _convolve(w, f.values, mode)
    else:
        # drop the anchor value, then the anchor output is the empty sum
        zeroed = (f.values[0] * 0,) + f.values[1:]
        vals = _convolve(w, zeroed, mode)
    return GridFunction(f.base, f.orientation, vals)


def _delta_sum(f: GridFunction, alpha) -> GridFunction:
    mode = f.mode
    a = _order_value(alpha, mode)
    w = gbinom_weights(a, len(f))
    vals = _convolve(w, f.values, mode)
    shift = _rational_shift(alpha)
    base = f.base + shift if f.orientation == LEFT else f.base - shift
    return GridFunction(base, f.orientation, vals)


def _rational_shift(alpha) -> Fraction:
    if isinstance(alpha, Order):
        alpha = alpha.alpha
    if isinstance(alpha, float):
        return Fraction(str(alpha)) if not alpha.is_integer() else Fraction(int(alpha))
    return Fraction(alpha)


# ---------------------------------------------------------------------------
# the four fractional differences (order n difference of an order n-alpha sum)

def nabla_left_diff(f: GridFunction, alpha, convention: str = STANDARD) -> GridFunction:
    """nabla^n applied to the order (n - alpha) nabla left sum.

    Output is anchored at the input base a; the definition's own window
    starts at a + 1 and the codomain observation at a + n (see
    operator_domain), earlier points being empty-sum artifacts.
    """
    _check_orientation(f, LEFT, "nabla_left_diff")
    n, beta = _split_order(f, alpha)
    u = f if beta is None else nabla_left_sum(f, beta, convention)
    return nabla_diff(u.zero_extend(n), n)


def nabla_right_diff(f: GridFunction, alpha) -> GridFunction:
    """(-1)^n Delta^n applied to the order (n - alpha) nabla right sum."""
    _check_orientation(f, RIGHT, "nabla_right_diff")
    n, beta = _split_order(f, alpha)
    u = f if beta is None else nabla_right_sum(f, beta)
    return delta_diff(u.zero_extend(n), n, signed=True)


def delta_left_diff(f: GridFunction, alpha) -> GridFunction:
    """Delta^n applied to the order (n - alpha) delta left sum."""
    _check_orientation(f, LEFT, "delta_left_diff")
    n, beta = _split_order(f, alpha)
    u = f if beta is None else delta_left_sum(f, beta)
    return delta_diff(u.zero_extend(n), n)


def delta_right_diff(f: GridFunction, alpha) -> GridFunction:
    """(-1)^n nabla^n applied to the order (n - alpha) delta right sum."""
    _check_orientation(f, RIGHT, "delta_right_diff")
    n, beta = _split_order(f, alpha)
    u = f if beta is None else delta_right_sum(f, beta)
    return nabla_diff(u.zero_extend(n), n, signed=True)


def _split_order(f: GridFunction, alpha):
    """(n, n - alpha); the residual order is None when alpha is an integer,
    in which case the order-0 sum is the identity.

    The residual order stays in the order's own representation: a Fraction
    order keeps its exact lattice shift even when the data is float.
    """
    if isinstance(alpha, Order):
        alpha = alpha.alpha
    if f.mode == EXACT and mode_of(alpha) == FLOAT:
        raise ModeError("exact-mode function with float order")
    a = alpha if isinstance(alpha, (Fraction, int)) else float(alpha)
    if not a > 0:
        raise ValueError(f"fractional difference order must be positive, got {a}")
    n = ceil_scalar(a)
    beta = n - a
    if beta == 0:
        return n, None
    if len(f) <= n:
        raise WindowError(f"window of {len(f)} points too short for order {a}")
    return n, beta


# ---------------------------------------------------------------------------
# dispatcher used by the CLI and the identity registry

_DISPATCH = {
    "delta-left-sum": lambda f, a, c: delta_left_sum(f, a),
    "delta-right-sum": lambda f, a, c: delta_right_sum(f, a),
    "nabla-left-sum": lambda f, a, c: nabla_left_sum(f, a, c),
    "nabla-right-sum": lambda f, a, c: nabla_right_sum(f, a),
    "delta-left-diff": lambda f, a, c: delta_left_diff(f, a),
    "delta-right-diff": lambda f, a, c: delta_right_diff(f, a),
    "nabla-left-diff": lambda f, a, c: nabla_left_diff(f, a, c),
    "nabla-right-diff": lambda f, a, c: nabla_right_diff(f, a),
}


def apply_operator(kind: str, f: GridFunction, alpha, convention: str = STANDARD) -> GridFunction:
    try:
        op = _DISPATCH[kind]
    except KeyError:
        raise ValueError(f"unknown operator kind {kind!r}") from None
    return op(f, alpha, convention)
