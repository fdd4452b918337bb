"""Registry of machine-checkable operator identities.

Each check evaluates both sides of one named identity at every lattice
point where both are defined, over a number of random rational (or float)
trial functions, and reports the maximum residual. In exact mode a passing
check has residual exactly zero -- no tolerance anywhere; float mode uses a
relative tolerance.

The dual-left checks honor the convention switch: they hold under the
inclusive-base nabla left sum and acquire a nonzero residual under the
standard one, and both outcomes are part of the contract.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .grid import LEFT, RIGHT, GridFunction, reorient
from .kernels import gbinom, kernel_value
from .operators import (
    INCLUSIVE,
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
from .scalars import (
    EXACT,
    FLOAT,
    DomainError,
    ceil_scalar,
    format_number,
)

ANY_ORDER = "any"
NONINTEGER = "noninteger"
INTEGER = "integer"


@dataclass(frozen=True)
class CheckConfig:
    """One identity-check run: order, window [a, b], trial count, seed."""

    alpha: Fraction
    a: Fraction = Fraction(0)
    window: int = 12
    mode: str = EXACT
    seed: int = 1
    trials: int = 10
    convention: str = INCLUSIVE
    tolerance: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.window < 6:
            raise DomainError("window must span at least 6 points")
        if self.trials < 1:
            raise DomainError("trials must be >= 1")
        if self.alpha <= 0:
            raise DomainError("order must be positive")

    @property
    def b(self) -> Fraction:
        return self.a + self.window


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    mode: str
    alpha: str
    window: str
    seed: int
    trials: int
    points: int
    residual: str
    passed: bool
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check_id,
            "mode": self.mode,
            "alpha": self.alpha,
            "window": self.window,
            "seed": self.seed,
            "trials": self.trials,
            "points": self.points,
            "residual": self.residual,
            "pass": self.passed,
            "error": self.error,
        }


class _Ctx:
    """Per-run bundle: config, rng, and the order in both representations."""

    def __init__(self, cfg: CheckConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng
        self.mode = cfg.mode
        self.a = cfg.a
        self.b = cfg.b
        self.N = cfg.window + 1
        self.alpha_exact = cfg.alpha
        # the order stays exact even in float mode so the alpha-shifted
        # output lattices line up exactly; operators downcast it internally
        self.al = cfg.alpha
        self.n = ceil_scalar(cfg.alpha)
        self.alpha_is_integer = cfg.alpha.denominator == 1
        self.convention = cfg.convention

    def rand_values(self, count: int):
        vals = [
            Fraction(self.rng.randint(-100, 100), self.rng.randint(1, 20))
            for _ in range(count)
        ]
        if self.mode == FLOAT:
            return [float(v) for v in vals]
        return vals

    def rand_left(self, base, count: int) -> GridFunction:
        return GridFunction(base, LEFT, self.rand_values(count))

    def rand_right(self, base, count: int) -> GridFunction:
        return GridFunction(base, RIGHT, self.rand_values(count))

    def rand_mu(self, min_exclusive: int = 0):
        # a random rational strictly above min_exclusive, at most 60
        den = self.rng.randint(1, 20)
        mu = Fraction(self.rng.randint(min_exclusive * den + 1, 60), den)
        return mu if self.mode == EXACT else float(mu)


def _residual(lhs, rhs, mode: str):
    d = abs(lhs - rhs)
    if mode == EXACT:
        return d
    scale = max(1.0, abs(lhs), abs(rhs))
    return d / scale


# ---------------------------------------------------------------------------
# individual checks; each returns a list of (lhs, rhs) pairs for one trial


def _chk_commute_delta_left(ctx):
    f = ctx.rand_left(ctx.a, ctx.N)
    lhs = delta_left_sum(delta_diff(f), ctx.al)
    rhs = delta_diff(delta_left_sum(f, ctx.al))
    return [
        (lhs.values[m], rhs.values[m] - gbinom(ctx.al, m + 1) * f.values[0])
        for m in range(ctx.N - 1)
    ]


def _chk_commute_delta_right(ctx):
    g = ctx.rand_right(ctx.b, ctx.N)
    lhs = delta_right_sum(nabla_diff(g, 1, signed=True), ctx.al)
    rhs = nabla_diff(delta_right_sum(g, ctx.al), 1, signed=True)
    return [
        (lhs.values[m], rhs.values[m] - gbinom(ctx.al, m + 1) * g.values[0])
        for m in range(ctx.N - 1)
    ]


def _chk_commute_nabla_left_shifted(ctx):
    # both sums use the inclusive-base convention here
    f = ctx.rand_left(ctx.a, ctx.N)
    lhs = nabla_left_sum(nabla_diff(f), ctx.al, INCLUSIVE)
    rhs = nabla_diff(nabla_left_sum(f, ctx.al, INCLUSIVE))
    return [
        (lhs.at(ctx.a + j), rhs.at(ctx.a + j) - gbinom(ctx.al, j) * f.values[0])
        for j in range(1, ctx.N)
    ]


def _commute_nabla_left_pairs(ctx, order):
    f = ctx.rand_left(ctx.a, ctx.N)
    # a sum anchored at a over a function living on N_{a+1} starts at a+1,
    # which is the inclusive sum on the shifted anchor
    lhs = nabla_left_sum(nabla_diff(f), order, INCLUSIVE)
    rhs = nabla_diff(nabla_left_sum(f, order))
    return [
        (
            lhs.at(ctx.a + j),
            rhs.at(ctx.a + j) - kernel_value(order, j - 1) * f.values[0],
        )
        for j in range(1, ctx.N)
    ]


def _chk_commute_nabla_left(ctx):
    pairs = _commute_nabla_left_pairs(ctx, ctx.al)
    # the identity is pure kernel algebra, valid for any real order: also
    # exercise the (nonpositive) order alpha - n
    pairs += _commute_nabla_left_pairs(ctx, ctx.al - ctx.n)
    return pairs


def _commute_nabla_right_pairs(ctx, order):
    g = ctx.rand_right(ctx.b, ctx.N)
    h = delta_diff(g, 1, signed=True)  # lives on _{b-1}N
    lhs = nabla_right_sum(h.zero_extend(1), order)  # re-anchored at b
    rhs = delta_diff(nabla_right_sum(g, order), 1, signed=True)
    return [
        (
            lhs.at(ctx.b - j),
            rhs.at(ctx.b - j) - kernel_value(order, j - 1) * g.values[0],
        )
        for j in range(1, ctx.N)
    ]


def _chk_commute_nabla_right(ctx):
    return _commute_nabla_right_pairs(ctx, ctx.al) + _commute_nabla_right_pairs(
        ctx, ctx.al - ctx.n
    )


def _chk_commute_nabla_left_higher(ctx):
    pairs = []
    for p in (1, 2, 3):
        fw = ctx.rand_left(ctx.a - p, ctx.N + p)
        lhs = nabla_left_sum(nabla_diff(fw, p), ctx.al)
        rhs = nabla_diff(nabla_left_sum(fw.restrict(ctx.a), ctx.al).zero_extend(p), p)
        for j in range(1, ctx.N):
            corr = sum(
                kernel_value(ctx.al - p + k + 1, j - 1) * nabla_diff(fw, k).at(ctx.a)
                for k in range(p)
            )
            pairs.append((lhs.at(ctx.a + j), rhs.at(ctx.a + j) - corr))
    return pairs


def _chk_commute_nabla_right_higher(ctx):
    pairs = []
    for p in (1, 2, 3):
        gw = ctx.rand_right(ctx.b + p, ctx.N + p)
        lhs = nabla_right_sum(delta_diff(gw, p, signed=True), ctx.al)
        rhs = delta_diff(
            nabla_right_sum(gw.restrict(ctx.b), ctx.al).zero_extend(p), p, signed=True
        )
        for j in range(1, ctx.N):
            corr = sum(
                kernel_value(ctx.al - p + k + 1, j - 1)
                * delta_diff(gw, k, signed=True).at(ctx.b)
                for k in range(p)
            )
            pairs.append((lhs.at(ctx.b - j), rhs.at(ctx.b - j) - corr))
    return pairs


def _chk_commute_nabla_left_restricted(ctx):
    # f lives on N_a only; everything re-anchors at a + p - 1
    pairs = []
    f = ctx.rand_left(ctx.a, ctx.N)
    for p in (1, 2, 3):
        ap = ctx.a + p - 1
        lhs = nabla_left_sum(nabla_diff(f, p).zero_extend(1), ctx.al)
        rhs = nabla_diff(nabla_left_sum(f.restrict(ap), ctx.al).zero_extend(p), p)
        for j in range(1, ctx.N - p + 1):
            t = ap + j
            if t not in rhs or t not in lhs:
                continue
            corr = sum(
                kernel_value(ctx.al - p + k + 1, j - 1) * nabla_diff(f, k).at(ap)
                for k in range(p)
            )
            pairs.append((lhs.at(t), rhs.at(t) - corr))
    return pairs


def _chk_commute_nabla_right_restricted(ctx):
    pairs = []
    g = ctx.rand_right(ctx.b, ctx.N)
    for p in (1, 2, 3):
        bp = ctx.b - p + 1
        lhs = nabla_right_sum(delta_diff(g, p, signed=True).zero_extend(1), ctx.al)
        rhs = delta_diff(
            nabla_right_sum(g.restrict(bp), ctx.al).zero_extend(p), p, signed=True
        )
        for j in range(1, ctx.N - p + 1):
            t = bp - j
            if t not in rhs or t not in lhs:
                continue
            corr = sum(
                kernel_value(ctx.al - p + k + 1, j - 1)
                * delta_diff(g, k, signed=True).at(bp)
                for k in range(p)
            )
            pairs.append((lhs.at(t), rhs.at(t) - corr))
    return pairs


def _chk_dual_left_sum(ctx):
    y = ctx.rand_left(ctx.a, ctx.N)
    lhs = delta_left_sum(y, ctx.al)
    rhs = nabla_left_sum(y, ctx.al, ctx.convention)
    return [(lhs.at(t + ctx.alpha_exact), rhs.at(t)) for t in rhs.points()]


def _chk_dual_left_diff(ctx):
    y = ctx.rand_left(ctx.a, ctx.N)
    lhs = delta_left_diff(y, ctx.al)
    rhs = nabla_left_diff(y, ctx.al, ctx.convention)
    return [(lhs.at(t - ctx.alpha_exact), rhs.at(t)) for t in rhs.points()]


def _chk_dual_left_base(ctx):
    a0 = ctx.alpha_exact - ctx.n
    y = ctx.rand_left(a0, ctx.N)
    beta = ctx.n - ctx.al
    pairs = []
    if beta != 0:
        lhs = delta_left_sum(y, beta)  # anchored at 0
        rhs = nabla_left_sum(y, beta, INCLUSIVE)
        shift = ctx.n - ctx.alpha_exact
        pairs += [(lhs.at(t), rhs.at(t - shift)) for t in lhs.points()]
    lhs = delta_left_diff(y, ctx.al)  # anchored at -n
    rhs = nabla_left_diff(y, ctx.al, INCLUSIVE)
    pairs += [
        (lhs.at(t), rhs.at(t + ctx.alpha_exact))
        for t in lhs.points()
        if t + ctx.alpha_exact in rhs
    ]
    return pairs


def _chk_dual_right_sum(ctx):
    y = ctx.rand_right(ctx.b + 1, ctx.N)
    lhs = delta_right_sum(y.restrict(ctx.b), ctx.al)
    rhs = nabla_right_sum(y, ctx.al)
    return [
        (lhs.at(t - ctx.alpha_exact), rhs.at(t))
        for t in rhs.points()
        if t - ctx.alpha_exact in lhs
    ]


def _chk_dual_right_diff(ctx):
    y = ctx.rand_right(ctx.b + 1, ctx.N)
    lhs = delta_right_diff(y.restrict(ctx.b), ctx.al)
    rhs = nabla_right_diff(y, ctx.al)
    return [
        (lhs.at(t + ctx.alpha_exact), rhs.at(t))
        for t in rhs.points()
        if t + ctx.alpha_exact in lhs
    ]


def _chk_dual_right_base(ctx):
    b0 = ctx.n - ctx.alpha_exact
    y = ctx.rand_right(b0, ctx.N)
    beta = ctx.n - ctx.al
    pairs = []
    if beta != 0:
        lhs = delta_right_sum(y, beta)  # anchored at 0
        rhs = nabla_right_sum(y.zero_extend(1), beta)
        shift = ctx.n - ctx.alpha_exact
        pairs += [
            (lhs.at(t), rhs.at(t + shift)) for t in lhs.points() if t + shift in rhs
        ]
    lhs = delta_right_diff(y, ctx.al)
    rhs = nabla_right_diff(y.zero_extend(1), ctx.al)
    pairs += [
        (lhs.at(t), rhs.at(t - ctx.alpha_exact))
        for t in lhs.points()
        if t - ctx.alpha_exact in rhs
    ]
    return pairs


def _chk_power_delta_right(ctx):
    # both sides normalized by the Gamma(mu+1) factor, leaving pure kernels
    mu = ctx.rand_mu()
    mu_exact = Fraction(mu) if ctx.mode == EXACT else Fraction(str(mu))
    base = ctx.b - mu_exact
    f = GridFunction(base, RIGHT, [gbinom(mu + 1, k) for k in range(ctx.N)])
    lhs = delta_right_sum(f, ctx.al)
    return [
        (lhs.values[m], gbinom(ctx.al + mu + 1, m)) for m in range(ctx.N)
    ]


def _chk_power_nabla_right(ctx):
    mu = ctx.rand_mu(min_exclusive=-1)
    f = GridFunction(
        ctx.b, RIGHT, [kernel_value(mu + 1, k - 1) for k in range(ctx.N)]
    )
    lhs = nabla_right_sum(f, ctx.al)
    return [
        (lhs.at(ctx.b - j), kernel_value(ctx.al + mu + 1, j - 1))
        for j in range(ctx.N)
    ]


def _chk_power_nabla_left(ctx):
    mu = ctx.rand_mu(min_exclusive=-1)
    f = GridFunction(
        ctx.a, LEFT, [kernel_value(mu + 1, k - 1) for k in range(ctx.N)]
    )
    lhs = nabla_left_sum(f, ctx.al)
    return [
        (lhs.at(ctx.a + j), kernel_value(ctx.al + mu + 1, j - 1))
        for j in range(ctx.N)
    ]


def _chk_semigroup_delta_right(ctx):
    beta = ctx.rand_mu()
    g = ctx.rand_right(ctx.b, ctx.N)
    lhs = delta_right_sum(delta_right_sum(g, beta), ctx.al)
    rhs = delta_right_sum(g, ctx.al + beta)
    return [(lhs.values[m], rhs.values[m]) for m in range(ctx.N)]


def _chk_semigroup_nabla_right(ctx):
    beta = ctx.rand_mu()
    g = ctx.rand_right(ctx.b, ctx.N)
    lhs = nabla_right_sum(nabla_right_sum(g, beta), ctx.al)
    rhs = nabla_right_sum(g, ctx.al + beta)
    return [(lhs.values[m], rhs.values[m]) for m in range(ctx.N)]


def _chk_semigroup_nabla_left(ctx):
    beta = ctx.rand_mu()
    f = ctx.rand_left(ctx.a, ctx.N)
    lhs = nabla_left_sum(nabla_left_sum(f, beta), ctx.al)
    rhs = nabla_left_sum(f, ctx.al + beta)
    return [(lhs.values[m], rhs.values[m]) for m in range(ctx.N)]


def _chk_ibp_sum_nabla(ctx):
    f = ctx.rand_left(ctx.a, ctx.N)
    g = ctx.rand_right(ctx.b, ctx.N)
    sf = nabla_left_sum(f, ctx.al)
    sg = nabla_right_sum(g, ctx.al)
    interior = [ctx.a + i for i in range(1, ctx.N - 1)]
    lhs = sum(g.at(s) * sf.at(s) for s in interior)
    rhs = sum(f.at(s) * sg.at(s) for s in interior)
    return [(lhs, rhs)]


def _chk_compose_left(ctx):
    pairs = []
    f = ctx.rand_left(ctx.a, ctx.N)
    # difference of the sum restores f
    lhs = nabla_left_diff(nabla_left_sum(f, ctx.al), ctx.al)
    pairs += [(lhs.at(ctx.a + j), f.at(ctx.a + j)) for j in range(1, ctx.N)]
    if not ctx.alpha_is_integer:
        # the residual-order sum vanishes at the anchor (empty sum)
        beta = ctx.n - ctx.al
        if nabla_left_sum(f, beta).at(ctx.a) != 0:
            raise AssertionError("empty-sum convention violated at the anchor")
        lhs = nabla_left_sum(nabla_left_diff(f, ctx.al), ctx.al)
        pairs += [(lhs.at(ctx.a + j), f.at(ctx.a + j)) for j in range(1, ctx.N)]
    else:
        # integer order leaves a discrete Taylor remainder
        n = ctx.n
        fw = ctx.rand_left(ctx.a - n, ctx.N + n)
        lhs = nabla_left_sum(nabla_diff(fw, n), ctx.al)
        for j in range(1, ctx.N):
            corr = sum(
                kernel_value(k + 1, j - 1) * nabla_diff(fw, k).at(ctx.a)
                for k in range(n)
            )
            pairs.append((lhs.at(ctx.a + j), fw.at(ctx.a + j) - corr))
    return pairs


def _chk_compose_right(ctx):
    pairs = []
    g = ctx.rand_right(ctx.b, ctx.N)
    lhs = nabla_right_diff(nabla_right_sum(g, ctx.al), ctx.al)
    pairs += [(lhs.at(ctx.b - j), g.at(ctx.b - j)) for j in range(1, ctx.N)]
    if not ctx.alpha_is_integer:
        beta = ctx.n - ctx.al
        if nabla_right_sum(g, beta).at(ctx.b) != 0:
            raise AssertionError("empty-sum convention violated at the anchor")
        lhs = nabla_right_sum(nabla_right_diff(g, ctx.al), ctx.al)
        pairs += [(lhs.at(ctx.b - j), g.at(ctx.b - j)) for j in range(1, ctx.N)]
    else:
        n = ctx.n
        gw = ctx.rand_right(ctx.b + n, ctx.N + n)
        lhs = nabla_right_sum(delta_diff(gw, n, signed=True), ctx.al)
        for j in range(1, ctx.N):
            corr = sum(
                kernel_value(k + 1, j - 1) * delta_diff(gw, k, signed=True).at(ctx.b)
                for k in range(n)
            )
            pairs.append((lhs.at(ctx.b - j), gw.at(ctx.b - j) - corr))
    return pairs


def _chk_ibp_diff_nabla(ctx):
    f = ctx.rand_right(ctx.b, ctx.N)
    g = ctx.rand_left(ctx.a, ctx.N)
    dg = nabla_left_diff(g, ctx.al)
    df = nabla_right_diff(f, ctx.al)
    interior = [ctx.a + i for i in range(1, ctx.N - 1)]
    lhs = sum(f.at(s) * dg.at(s) for s in interior)
    rhs = sum(g.at(s) * df.at(s) for s in interior)
    return [(lhs, rhs)]


def _chk_ibp_sum_delta(ctx):
    f = ctx.rand_left(ctx.a, ctx.N)
    g = ctx.rand_right(ctx.b, ctx.N)
    sf = delta_left_sum(f.restrict(ctx.a + 1), ctx.al)
    sg = delta_right_sum(g.restrict(ctx.b - 1), ctx.al)
    interior = [ctx.a + i for i in range(1, ctx.N - 1)]
    al = ctx.alpha_exact
    lhs = sum(g.at(s) * sf.at(s + al) for s in interior)
    rhs = sum(f.at(s) * sg.at(s - al) for s in interior)
    return [(lhs, rhs)]


def _chk_ibp_diff_delta(ctx):
    f = ctx.rand_right(ctx.b, ctx.N)
    g = ctx.rand_left(ctx.a, ctx.N)
    dg = delta_left_diff(g.restrict(ctx.a + 1), ctx.al)
    df = delta_right_diff(f.restrict(ctx.b - 1), ctx.al)
    interior = [ctx.a + i for i in range(1, ctx.N - 1)]
    al = ctx.alpha_exact
    lhs = sum(f.at(s) * dg.at(s - al) for s in interior)
    rhs = sum(g.at(s) * df.at(s + al) for s in interior)
    return [(lhs, rhs)]


def _reflected_pairs(ctx, left_out, right_out):
    c = ctx.a + ctx.b
    return [
        (left_out.at(t), right_out.at(c - t))
        for t in left_out.points()
        if c - t in right_out
    ]


def _q_operands(ctx):
    h = ctx.rand_left(ctx.a, ctx.N)
    reflected = GridFunction(ctx.a, LEFT, tuple(reversed(h.values)))
    return reflected, reorient(h)


def _chk_q_dual_delta_sum(ctx):
    qh, h_r = _q_operands(ctx)
    return _reflected_pairs(
        ctx, delta_left_sum(qh, ctx.al), delta_right_sum(h_r, ctx.al)
    )


def _chk_q_dual_delta_diff(ctx):
    qh, h_r = _q_operands(ctx)
    return _reflected_pairs(
        ctx, delta_left_diff(qh, ctx.al), delta_right_diff(h_r, ctx.al)
    )


def _chk_q_dual_nabla_sum(ctx):
    qh, h_r = _q_operands(ctx)
    return _reflected_pairs(
        ctx, nabla_left_sum(qh, ctx.al), nabla_right_sum(h_r, ctx.al)
    )


def _chk_q_dual_nabla_diff(ctx):
    qh, h_r = _q_operands(ctx)
    return _reflected_pairs(
        ctx, nabla_left_diff(qh, ctx.al), nabla_right_diff(h_r, ctx.al)
    )


def _chk_cauchy_left_delta(ctx):
    n = ctx.n
    f = ctx.rand_left(ctx.a, ctx.N)
    u = delta_left_sum(f, ctx.al).zero_extend(n)
    pairs = [(u.at(ctx.a + j), 0 * u.values[0]) for j in range(n)]
    du = delta_diff(u, n)
    pairs += [(du.at(t), f.at(t)) for t in f.points()]
    return pairs


def _chk_cauchy_right_delta(ctx):
    n = ctx.n
    g = ctx.rand_right(ctx.b, ctx.N)
    u = delta_right_sum(g, ctx.al).zero_extend(n)
    pairs = [(u.at(ctx.b - j), 0 * u.values[0]) for j in range(n)]
    du = nabla_diff(u, n, signed=True)
    pairs += [(du.at(t), g.at(t)) for t in g.points()]
    return pairs


def _chk_cauchy_left_nabla(ctx):
    n = ctx.n
    f = ctx.rand_left(ctx.a, ctx.N)
    y = nabla_left_sum(f, ctx.al).zero_extend(n)
    pairs = [(nabla_diff(y, i).at(ctx.a), 0 * f.values[0]) for i in range(n)]
    dy = nabla_diff(y, n)
    pairs += [(dy.at(t), f.at(t)) for t in f.points() if t != ctx.a]
    return pairs


def _chk_cauchy_right_nabla(ctx):
    n = ctx.n
    g = ctx.rand_right(ctx.b, ctx.N)
    y = nabla_right_sum(g, ctx.al).zero_extend(n)
    pairs = [
        (delta_diff(y, i, signed=True).at(ctx.b), 0 * g.values[0]) for i in range(n)
    ]
    dy = delta_diff(y, n, signed=True)
    pairs += [(dy.at(t), g.at(t)) for t in g.points() if t != ctx.b]
    return pairs


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    fn: Callable
    order_class: str
    description: str


_SPECS = [
    ("commute-delta-left", _chk_commute_delta_left, ANY_ORDER,
     "delta left sum commutes with the forward difference up to a boundary kernel term"),
    ("commute-delta-right", _chk_commute_delta_right, ANY_ORDER,
     "delta right sum commutes with the signed backward difference up to a boundary term"),
    ("commute-nabla-left-shifted", _chk_commute_nabla_left_shifted, ANY_ORDER,
     "inclusive-base nabla left sum on the shifted anchor commutes with the backward difference"),
    ("commute-nabla-left", _chk_commute_nabla_left, ANY_ORDER,
     "nabla left sum commutes with the backward difference; also run at the nonpositive order alpha - n"),
    ("commute-nabla-right", _chk_commute_nabla_right, ANY_ORDER,
     "nabla right sum commutes with the signed forward difference; also run at alpha - n"),
    ("commute-nabla-left-higher", _chk_commute_nabla_left_higher, ANY_ORDER,
     "p-fold commutation with correction series, data extending p points before the anchor"),
    ("commute-nabla-right-higher", _chk_commute_nabla_right_higher, ANY_ORDER,
     "p-fold right commutation with correction series, data extending p points after the anchor"),
    ("commute-nabla-left-restricted", _chk_commute_nabla_left_restricted, ANY_ORDER,
     "p-fold commutation re-anchored at a + p - 1 for data on the base lattice only"),
    ("commute-nabla-right-restricted", _chk_commute_nabla_right_restricted, ANY_ORDER,
     "p-fold right commutation re-anchored at b - p + 1 for data on the base lattice only"),
    ("dual-left-sum", _chk_dual_left_sum, ANY_ORDER,
     "delta left sum shifted by alpha equals the nabla left sum (inclusive-base convention)"),
    ("dual-left-diff", _chk_dual_left_diff, ANY_ORDER,
     "delta left difference shifted by -alpha equals the nabla left difference (inclusive-base)"),
    ("dual-left-base", _chk_dual_left_base, ANY_ORDER,
     "left duals on the lattice anchored at alpha - n"),
    ("dual-right-sum", _chk_dual_right_sum, ANY_ORDER,
     "delta right sum shifted by -alpha equals the nabla right sum from the next anchor"),
    ("dual-right-diff", _chk_dual_right_diff, NONINTEGER,
     "delta right difference shifted by alpha equals the nabla right difference from the next anchor"),
    ("dual-right-base", _chk_dual_right_base, ANY_ORDER,
     "right duals on the lattice anchored at n - alpha"),
    ("power-delta-right", _chk_power_delta_right, ANY_ORDER,
     "delta right sum of the degree-mu falling power, both sides normalized to pure kernels"),
    ("semigroup-delta-right", _chk_semigroup_delta_right, ANY_ORDER,
     "composition of delta right sums adds the orders on aligned points"),
    ("semigroup-nabla-right", _chk_semigroup_nabla_right, ANY_ORDER,
     "composition of nabla right sums adds the orders"),
    ("power-nabla-right", _chk_power_nabla_right, ANY_ORDER,
     "nabla right sum of the degree-mu rising power, normalized, mu > -1"),
    ("power-nabla-left", _chk_power_nabla_left, ANY_ORDER,
     "nabla left sum of the degree-mu rising power, normalized, mu > -1"),
    ("semigroup-nabla-left", _chk_semigroup_nabla_left, ANY_ORDER,
     "composition of nabla left sums adds the orders"),
    ("ibp-sum-nabla", _chk_ibp_sum_nabla, ANY_ORDER,
     "summation by parts moving a nabla left sum onto the other factor as a right sum"),
    ("compose-left", _chk_compose_left, ANY_ORDER,
     "left difference-of-sum and sum-of-difference compositions, with discrete Taylor remainder at integer order"),
    ("compose-right", _chk_compose_right, ANY_ORDER,
     "right difference-of-sum and sum-of-difference compositions, with remainder at integer order"),
    ("ibp-diff-nabla", _chk_ibp_diff_nabla, NONINTEGER,
     "by-parts exchange of nabla left and right differences (non-integer order only)"),
    ("ibp-sum-delta", _chk_ibp_sum_delta, ANY_ORDER,
     "summation by parts for delta sums with the alpha-shifted evaluation points"),
    ("ibp-diff-delta", _chk_ibp_diff_delta, NONINTEGER,
     "by-parts exchange of delta differences (non-integer order only)"),
    ("q-dual-delta-sum", _chk_q_dual_delta_sum, ANY_ORDER,
     "reflection exchanges delta left and right sums"),
    ("q-dual-delta-diff", _chk_q_dual_delta_diff, ANY_ORDER,
     "reflection exchanges delta left and right differences"),
    ("q-dual-nabla-sum", _chk_q_dual_nabla_sum, ANY_ORDER,
     "reflection exchanges nabla left and right sums"),
    ("q-dual-nabla-diff", _chk_q_dual_nabla_diff, ANY_ORDER,
     "reflection exchanges nabla left and right differences"),
    ("cauchy-integer-left-delta", _chk_cauchy_left_delta, INTEGER,
     "integer-order delta left sum solves the forward-difference initial value problem with zero starts"),
    ("cauchy-integer-right-delta", _chk_cauchy_right_delta, INTEGER,
     "integer-order delta right sum solves the signed backward-difference initial value problem"),
    ("cauchy-integer-left-nabla", _chk_cauchy_left_nabla, INTEGER,
     "integer-order nabla left sum solves the backward-difference initial value problem"),
    ("cauchy-integer-right-nabla", _chk_cauchy_right_nabla, INTEGER,
     "integer-order nabla right sum solves the signed forward-difference initial value problem"),
]

REGISTRY: dict[str, CheckSpec] = {
    cid: CheckSpec(cid, fn, cls, desc) for cid, fn, cls, desc in _SPECS
}


def check_ids() -> list[str]:
    return [s[0] for s in _SPECS]


def order_allowed(check_id: str, alpha: Fraction) -> bool:
    cls = REGISTRY[check_id].order_class
    if cls == NONINTEGER:
        return alpha.denominator != 1
    if cls == INTEGER:
        return alpha.denominator == 1
    return True


def run_check(check_id: str, cfg: CheckConfig) -> CheckReport:
    """Run one registered check; raises DomainError for an unknown id or an
    order outside the check's validity class."""
    if check_id not in REGISTRY:
        raise DomainError(
            f"unknown check {check_id!r}; valid ids: {', '.join(check_ids())}"
        )
    if not order_allowed(check_id, cfg.alpha):
        cls = REGISTRY[check_id].order_class
        raise DomainError(
            f"check {check_id} requires a {cls} order, got {cfg.alpha}"
        )
    rng = random.Random(cfg.seed)
    ctx = _Ctx(cfg, rng)
    fn = REGISTRY[check_id].fn
    worst = None
    points = 0
    try:
        for _ in range(cfg.trials):
            pairs = fn(ctx)
            if not pairs:
                raise DomainError("empty evaluation window (vacuous check)")
            points += len(pairs)
            for lhs, rhs in pairs:
                r = _residual(lhs, rhs, cfg.mode)
                if worst is None or r > worst:
                    worst = r
    except DomainError:
        raise
    except Exception as exc:  # surfaced in the report, the suite never aborts
        return CheckReport(
            check_id, cfg.mode, format_number(cfg.alpha), _window_str(cfg),
            cfg.seed, cfg.trials, points, "", False, error=str(exc),
        )
    passed = (worst == 0) if cfg.mode == EXACT else (worst <= cfg.tolerance)
    return CheckReport(
        check_id, cfg.mode, format_number(cfg.alpha), _window_str(cfg),
        cfg.seed, cfg.trials, points, format_number(worst), passed,
    )


def _window_str(cfg: CheckConfig) -> str:
    return f"[{format_number(cfg.a)}..{format_number(cfg.b)}]"


def run_suite(
    alphas,
    a=Fraction(0),
    window: int = 12,
    mode: str = EXACT,
    seed: int = 1,
    trials: int = 10,
    convention: str = INCLUSIVE,
    tolerance: float = 1e-9,
    ids=None,
) -> list[CheckReport]:
    """Run every registered check (or the given ids) over each legal order.

    Per-check errors become failed reports; the suite itself never aborts.
    Reports come back in registry order, then order value -- a deterministic
    merge no matter how the individual checks were scheduled.
    """
    wanted = list(ids) if ids else check_ids()
    reports = []
    for cid in wanted:
        if cid not in REGISTRY:
            raise DomainError(f"unknown check {cid!r}")
        for alpha in alphas:
            alpha = Fraction(alpha)
            if not order_allowed(cid, alpha):
                continue
            cfg = CheckConfig(
                alpha=alpha, a=a, window=window, mode=mode, seed=seed,
                trials=trials, convention=convention, tolerance=tolerance,
            )
            try:
                reports.append(run_check(cid, cfg))
            except DomainError as exc:
                reports.append(
                    CheckReport(
                        cid, mode, format_number(alpha), _window_str(cfg),
                        seed, trials, 0, "", False, error=str(exc),
                    )
                )
    return reports
