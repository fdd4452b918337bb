"""Operator tests against independent direct-summation oracles.

Each oracle evaluates the defining double sum (or stacked one-step
differences) with the kernel recomputed through the falling-factorial ratio,
so it shares no code path with the convolution implementation.
"""

import random
from fractions import Fraction

import pytest

from conftest import binom_oracle, rand_left, rand_right
from fracdiff import (
    INCLUSIVE,
    LEFT,
    RIGHT,
    STANDARD,
    GridFunction,
    ModeError,
    WindowError,
    apply_operator,
    delta_diff,
    delta_left_diff,
    delta_left_sum,
    delta_right_diff,
    delta_right_sum,
    nabla_diff,
    nabla_left_diff,
    nabla_left_sum,
    nabla_right_diff,
    nabla_right_sum,
)

ALPHAS = [Fraction(1, 2), Fraction(5, 4), Fraction(7, 3), Fraction(2)]


# ---------------------------------------------------------------------------
# oracles

def oracle_left_sum(f, alpha, start_index):
    out = []
    for j in range(len(f)):
        acc = Fraction(0)
        for i in range(start_index, j + 1):
            acc += binom_oracle(alpha, j - i) * f.values[i]
        out.append(acc)
    return out


def oracle_right_sum(f, alpha, start_index):
    # same triangular weights; the right lattice is already stored outward
    return oracle_left_sum(f, alpha, start_index)


def oracle_diff_values(values, m):
    vals = list(values)
    for _ in range(m):
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return vals


# ---------------------------------------------------------------------------
# sums

@pytest.mark.parametrize("alpha", ALPHAS)
def test_nabla_left_sum_standard(alpha):
    rng = random.Random(7)
    f = rand_left(rng, 0, 12)
    s = nabla_left_sum(f, alpha)
    assert s.base == 0 and s.orientation == LEFT
    assert list(s.values) == oracle_left_sum(f, alpha, start_index=1)
    assert s.values[0] == 0  # empty sum at the anchor


@pytest.mark.parametrize("alpha", ALPHAS)
def test_nabla_left_sum_inclusive(alpha):
    rng = random.Random(8)
    f = rand_left(rng, 3, 12)
    s = nabla_left_sum(f, alpha, INCLUSIVE)
    assert list(s.values) == oracle_left_sum(f, alpha, start_index=0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_nabla_right_sum(alpha):
    rng = random.Random(9)
    g = rand_right(rng, 10, 12)
    s = nabla_right_sum(g, alpha)
    assert s.base == 10 and s.orientation == RIGHT
    assert list(s.values) == oracle_right_sum(g, alpha, start_index=1)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_delta_left_sum(alpha):
    rng = random.Random(10)
    f = rand_left(rng, 1, 12)
    s = delta_left_sum(f, alpha)
    assert s.base == 1 + alpha
    assert list(s.values) == oracle_left_sum(f, alpha, start_index=0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_delta_right_sum(alpha):
    rng = random.Random(11)
    g = rand_right(rng, 10, 12)
    s = delta_right_sum(g, alpha)
    assert s.base == 10 - alpha
    assert list(s.values) == oracle_right_sum(g, alpha, start_index=0)


def test_constant_one_sum_values():
    ones = GridFunction(0, LEFT, [Fraction(1)] * 4)
    s = nabla_left_sum(ones, Fraction(1, 2))
    assert list(s.values) == [0, 1, Fraction(3, 2), Fraction(15, 8)]


# ---------------------------------------------------------------------------
# integer differences

def test_integer_diff_base_conventions():
    f = GridFunction(0, LEFT, [1, 4, 9, 16])
    d = delta_diff(f)
    assert d.base == 0 and d.values == (3, 5, 7)
    nd = nabla_diff(f)
    assert nd.base == 1 and nd.values == (3, 5, 7)
    g = GridFunction(10, RIGHT, [1, 4, 9])
    dg = delta_diff(g)  # forward difference needs the point above
    assert dg.base == 9 and dg.values == (-3, -5)
    ng = nabla_diff(g)
    assert ng.base == 10 and ng.values == (-3, -5)


def test_signed_diffs():
    g = GridFunction(10, RIGHT, [1, 4, 9])
    assert nabla_diff(g, 1, signed=True).values == (3, 5)
    assert nabla_diff(g, 2, signed=True).values == delta_diff(g, 2).values


def test_diff_window_too_short():
    f = GridFunction(0, LEFT, [1, 2])
    with pytest.raises(WindowError):
        delta_diff(f, 2)


# ---------------------------------------------------------------------------
# fractional differences

@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(5, 4), Fraction(7, 3)])
def test_nabla_left_diff_matches_composed_oracle(alpha):
    rng = random.Random(12)
    f = rand_left(rng, 0, 14)
    n = -(-alpha.numerator // alpha.denominator)
    s_vals = oracle_left_sum(f, n - alpha, start_index=1)
    padded = [Fraction(0)] * n + s_vals
    expect = oracle_diff_values(padded, n)
    d = nabla_left_diff(f, alpha)
    assert d.base == 0
    assert list(d.values) == expect


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(3, 2)])
def test_delta_left_diff_base(alpha):
    rng = random.Random(13)
    f = rand_left(rng, 0, 12)
    n = -(-alpha.numerator // alpha.denominator)
    d = delta_left_diff(f, alpha)
    assert d.base == -alpha  # a + (n - alpha) - n
    assert len(d) == 12


def test_integer_order_diff_is_plain_diff():
    rng = random.Random(14)
    f = rand_left(rng, 0, 8)
    d = nabla_left_diff(f, 2)
    plain = nabla_diff(f.zero_extend(2), 2)
    assert d == plain
    g = rand_right(rng, 8, 8)
    assert nabla_right_diff(g, 1) == delta_diff(g.zero_extend(1), 1, signed=True)


def test_right_diffs_shapes():
    rng = random.Random(15)
    g = rand_right(rng, 9, 10)
    d = nabla_right_diff(g, Fraction(3, 2))
    assert d.base == 9 and d.orientation == RIGHT
    dd = delta_right_diff(g, Fraction(3, 2))
    # sum anchor b - (n - alpha) plus the n-point zero extension: b + alpha
    assert dd.base == 9 + Fraction(3, 2)


# ---------------------------------------------------------------------------
# mode handling and dispatch

def test_exact_function_rejects_float_order():
    f = GridFunction(0, LEFT, [Fraction(1), Fraction(2)])
    with pytest.raises(ModeError):
        nabla_left_sum(f, 0.5)
    with pytest.raises(ModeError):
        nabla_left_diff(f, 0.5)


def test_float_function_accepts_exact_order():
    f = GridFunction(0, LEFT, [1.0, 2.0, 3.0])
    s = nabla_left_sum(f, Fraction(1, 2))
    assert isinstance(s.values[2], float)


def test_float_shadow_of_exact():
    rng = random.Random(16)
    f = rand_left(rng, 0, 20)
    ff = GridFunction(0, LEFT, [float(v) for v in f.values])
    for alpha in (Fraction(1, 2), Fraction(7, 3)):
        ex = nabla_left_sum(f, alpha)
        fl = nabla_left_sum(ff, alpha)
        for a, b in zip(ex.values, fl.values):
            assert b == pytest.approx(float(a), rel=1e-11, abs=1e-11)


def test_wrong_orientation_rejected():
    g = GridFunction(5, RIGHT, [1, 2, 3])
    with pytest.raises(ValueError):
        nabla_left_sum(g, Fraction(1, 2))
    f = GridFunction(0, LEFT, [1, 2, 3])
    with pytest.raises(ValueError):
        delta_right_sum(f, Fraction(1, 2))


def test_inclusive_convention_left_only():
    from fracdiff.operators import _nabla_sum

    g = GridFunction(5, RIGHT, [1, 2, 3])
    with pytest.raises(ValueError):
        _nabla_sum(g, Fraction(1, 2), INCLUSIVE)
    with pytest.raises(ValueError):
        _nabla_sum(g, Fraction(1, 2), "no-such-convention")


def test_nonpositive_diff_order_rejected():
    f = GridFunction(0, LEFT, [1, 2, 3])
    with pytest.raises(ValueError):
        nabla_left_diff(f, Fraction(-1, 2))


def test_dispatcher_covers_all_tags():
    rng = random.Random(17)
    f = rand_left(rng, 0, 10)
    g = rand_right(rng, 9, 10)
    alpha = Fraction(1, 2)
    assert apply_operator("nabla-left-sum", f, alpha, STANDARD) == nabla_left_sum(f, alpha)
    assert apply_operator("nabla-left-sum", f, alpha, INCLUSIVE) == nabla_left_sum(
        f, alpha, INCLUSIVE
    )
    assert apply_operator("delta-left-sum", f, alpha) == delta_left_sum(f, alpha)
    assert apply_operator("nabla-right-sum", g, alpha) == nabla_right_sum(g, alpha)
    assert apply_operator("delta-right-sum", g, alpha) == delta_right_sum(g, alpha)
    assert apply_operator("nabla-left-diff", f, alpha) == nabla_left_diff(f, alpha)
    assert apply_operator("delta-left-diff", f, alpha) == delta_left_diff(f, alpha)
    assert apply_operator("nabla-right-diff", g, alpha) == nabla_right_diff(g, alpha)
    assert apply_operator("delta-right-diff", g, alpha) == delta_right_diff(g, alpha)
    with pytest.raises(ValueError):
        apply_operator("no-such", f, alpha)


def test_backends_agree():
    import numpy as np

    from fracdiff._accel import compiled_backend, python_backend

    try:
        c_table, c_conv = compiled_backend()
    except ImportError:
        pytest.skip("compiled backend not built")
    p_table, p_conv = python_backend()
    rng = np.random.default_rng(0)
    v = rng.standard_normal(200)
    wc, wp = c_table(0.75, 200), p_table(0.75, 200)
    assert np.allclose(wc, wp, rtol=1e-14)
    assert np.allclose(c_conv(wc, v), p_conv(wp, v), rtol=1e-12, atol=1e-12)
