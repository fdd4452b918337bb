import random
from fractions import Fraction

import pytest

from conftest import binom_oracle
from fracdiff import (
    AffineRhs,
    ConvergenceError,
    DomainError,
    ExpressionRhs,
    GridFunction,
    IVProblem,
    LEFT,
    SingularStepError,
    ZeroRhs,
    gbinom,
    representation_chain,
    representation_terms,
    residual,
    solve,
)


def oracle_affine_trace(alpha, c, lam, mu_at, horizon):
    """Brute-force rational recursion, independent of the solver module."""
    ys = [c]
    for k in range(1, horizon + 1):
        acc = c * binom_oracle(alpha, k)
        for j in range(1, k):
            acc += binom_oracle(alpha, k - j) * (lam * ys[j] + mu_at(j))
        ys.append((acc + mu_at(k)) / (1 - lam))
    return ys


def test_homogeneous_half_order_is_the_kernel():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), ZeroRhs(), 8)
    tr = solve(p)
    assert list(tr.values) == [gbinom(Fraction(1, 2), k) for k in range(9)]
    assert tr.values[:4] == (1, Fraction(1, 2), Fraction(3, 8), Fraction(5, 16))
    assert residual(p, tr) == 0


def test_half_slope_first_steps():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), AffineRhs(Fraction(1, 2)), 6)
    tr = solve(p)
    assert tr.values[1] == 1
    assert tr.values[2] == Fraction(5, 4)
    assert residual(p, tr) == 0


def test_oracle_equivalence_random_affine():
    rng = random.Random(31)
    done = 0
    while done < 8:
        num = rng.randint(1, 17)
        den = rng.randint(2, 6)
        if num % den == 0:
            continue
        alpha = Fraction(num, den)
        if alpha >= 3:
            continue
        lam = Fraction(rng.randint(-4, 4), rng.randint(1, 5))
        if lam == 1:
            continue
        c = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        mu = Fraction(rng.randint(-10, 10), rng.randint(1, 10))
        p = IVProblem(alpha, 0, c, AffineRhs(lam, mu), 20)
        tr = solve(p)
        assert list(tr.values) == oracle_affine_trace(alpha, c, lam, lambda k: mu, 20)
        assert residual(p, tr) == 0
        done += 1


def test_mu_table():
    mu = [Fraction(k, 3) for k in range(1, 11)]
    p = IVProblem(Fraction(3, 2), 0, Fraction(2), AffineRhs(Fraction(1, 3), mu), 10)
    tr = solve(p)
    assert list(tr.values) == oracle_affine_trace(
        Fraction(3, 2), Fraction(2), Fraction(1, 3), lambda k: mu[k - 1], 10
    )
    with pytest.raises(DomainError):
        solve(IVProblem(Fraction(3, 2), 0, Fraction(2), AffineRhs(0, mu), 11))


def test_start_point_and_single_initial_condition():
    p = IVProblem(Fraction(7, 3), 5, Fraction(4), ZeroRhs(), 4)
    assert p.n == 3 and p.start == 7  # a + n - 1
    tr = solve(p)
    assert tr.y.base == 7 and tr.values[0] == 4
    # deterministic: same problem, same trace
    assert solve(p) == tr


def test_homogeneous_scaling():
    base = solve(IVProblem(Fraction(5, 4), 0, Fraction(1), AffineRhs(Fraction(1, 2)), 8))
    scaled = solve(IVProblem(Fraction(5, 4), 0, Fraction(3), AffineRhs(Fraction(1, 2)), 8))
    assert all(3 * b == s for b, s in zip(base.values, scaled.values))


def test_singular_step():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), AffineRhs(Fraction(1)), 3)
    with pytest.raises(SingularStepError):
        solve(p)


def test_integer_order_rejected():
    with pytest.raises(DomainError):
        IVProblem(Fraction(2), 0, Fraction(1), ZeroRhs(), 3)
    with pytest.raises(DomainError):
        IVProblem(Fraction(-1, 2), 0, Fraction(1), ZeroRhs(), 3)


def test_exact_mode_requires_exact_capable_rhs():
    with pytest.raises(DomainError):
        IVProblem(Fraction(1, 2), 0, Fraction(1), ExpressionRhs("y"), 3)
    with pytest.raises(Exception):
        IVProblem(Fraction(1, 2), 0, 1.0, ZeroRhs(), 3)  # float c in exact mode


def test_float_mode_general_rhs_converges_and_closes():
    p = IVProblem(Fraction(1, 2), 0, 1.0, ExpressionRhs("0.2*sin(y) + 0.01*t"), 30, mode="float")
    tr = solve(p)
    assert residual(p, tr) <= 1e-10
    assert max(tr.iterations) <= 200


def test_float_shadow_of_affine():
    exact = solve(IVProblem(Fraction(1, 2), 0, Fraction(1), AffineRhs(Fraction(1, 2)), 25))
    flt = solve(IVProblem(Fraction(1, 2), 0, 1.0, AffineRhs(0.5, 0.0), 25, mode="float"))
    for a, b in zip(exact.values, flt.values):
        assert b == pytest.approx(float(a), rel=1e-10)
    pf = IVProblem(Fraction(1, 2), 0, 1.0, AffineRhs(0.5, 0.0), 25, mode="float")
    assert residual(pf, flt) <= 1e-10


def test_nonconvergent_rhs_raises():
    # slope 40 fixed point diverges and the residual map has no sign change
    # nearby that bisection can exploit within the iteration budget
    p = IVProblem(
        Fraction(1, 2), 0, 1.0, ExpressionRhs("40.0*y + exp(min(y, 50.0))*0"), 3,
        mode="float",
    )
    try:
        tr = solve(p, max_iter=20)
        # bisection may still find the affine root; then the trace must close
        assert residual(p, tr) <= 1e-6
    except ConvergenceError as exc:
        assert exc.last_iterate is not None


def test_residual_detects_corruption():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), ZeroRhs(), 6)
    tr = solve(p)
    vals = list(tr.y.values)
    vals[3] += Fraction(1, 7)
    bad = type(tr)(GridFunction(tr.y.base, LEFT, vals), tr.iterations)
    assert residual(p, bad) != 0


def test_representation_terms_telescope():
    for alpha in (Fraction(5, 4), Fraction(3, 2), Fraction(7, 4), Fraction(9, 4), Fraction(5, 2)):
        p = IVProblem(alpha, 0, Fraction(3, 7), ZeroRhs(), 12)
        for k in range(10):
            multi, single = representation_terms(p, p.start + k)
            assert multi == single
            assert single == p.c * gbinom(alpha, k)
            chain = representation_chain(p, p.start + k)
            assert len(chain) == p.n + 1
            assert all(v == chain[0] for v in chain)


def test_representation_chain_zero_c():
    p = IVProblem(Fraction(5, 4), 0, Fraction(0), ZeroRhs(), 4)
    assert representation_terms(p, p.start + 3) == (0, 0)


def test_representation_domain_errors():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), ZeroRhs(), 4)
    with pytest.raises(DomainError):
        representation_chain(p, p.start + 1)  # needs order > 1
    p2 = IVProblem(Fraction(3, 2), 0, Fraction(1), ZeroRhs(), 4)
    with pytest.raises(DomainError):
        representation_chain(p2, p2.start + Fraction(1, 2))


def test_problem_json_round_trip():
    p = IVProblem(
        Fraction(5, 4), Fraction(1), Fraction(2, 3),
        AffineRhs(Fraction(1, 2), [Fraction(1), Fraction(2)]), 2,
    )
    q = IVProblem.from_json(p.to_json())
    assert q == p
    z = IVProblem.from_json('{"alpha": "1/2", "horizon": 3}')
    assert isinstance(z.rhs, ZeroRhs) and z.c == 0


def test_trace_csv_format():
    p = IVProblem(Fraction(1, 2), 0, Fraction(1), ZeroRhs(), 3)
    text = solve(p).to_csv(comments=["hello"])
    lines = text.splitlines()
    assert lines[0] == "# hello"
    assert lines[1] == "k,t,y"
    assert lines[2] == "0,0,1"
    assert lines[3] == "1,1,1/2"
