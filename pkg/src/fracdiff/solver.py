"""Forward stepping for the fractional initial value problem

    nabla-left-diff of order alpha, anchored at a(alpha) - 1, of y  =  f(t, y)
    y(a(alpha)) = c,            a(alpha) = a + n - 1,  n = ceil(alpha),

for non-integer alpha > 0. The problem needs exactly one initial condition
no matter how large n is: the solution at step k is

    y_k = c * gbinom(alpha, k) + sum_{j=1..k} gbinom(alpha, k - j) f(t_j, y_j)

and since gbinom(alpha, 0) = 1 the unknown y_k enters the memory sum with
coefficient exactly 1, so each step is a scalar implicit solve. Affine
right-hand sides f = lam*y + mu(t) are solved in closed form (the only
exact-mode path); general float right-hand sides use damped fixed-point
iteration with a bisection fallback.

Integer orders are out of scope here: they need n initial conditions and
are covered by the classical recursions (see the cauchy-integer-* checks).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .grid import LEFT, GridFunction
from .kernels import gbinom, gbinom_weights, kernel_value
from .operators import nabla_left_diff
from .scalars import (
    EXACT,
    FLOAT,
    DomainError,
    ModeError,
    ceil_scalar,
    format_number,
    mode_of,
    parse_number,
    parse_rational,
    zero,
)


class SingularStepError(ArithmeticError):
    """Affine implicit step with unit slope: 1 - lam = 0."""


class ConvergenceError(ArithmeticError):
    """The implicit scalar solve did not converge within max_iter."""

    def __init__(self, message: str, last_iterate: float):
        super().__init__(message)
        self.last_iterate = last_iterate


# ---------------------------------------------------------------------------
# right-hand sides

@dataclass(frozen=True)
class ZeroRhs:
    exact_capable = True

    def __call__(self, t, y):
        return 0 * y

    def to_dict(self):
        return {"kind": "zero"}


@dataclass(frozen=True)
class AffineRhs:
    """f(t, y) = lam * y + mu, with mu a constant or a per-step table.

    A table mu is indexed by the step number k >= 1 (entry k - 1) and must
    cover the horizon.
    """

    lam: object
    mu: object = 0

    exact_capable = True

    def mu_at(self, k: int):
        if isinstance(self.mu, (list, tuple)):
            if not 1 <= k <= len(self.mu):
                raise DomainError(f"mu table has no entry for step {k}")
            return self.mu[k - 1]
        return self.mu

    def value(self, k: int, y):
        return self.lam * y + self.mu_at(k)

    def to_dict(self):
        if isinstance(self.mu, (list, tuple)):
            mu = [format_number(m) for m in self.mu]
        else:
            mu = format_number(self.mu)
        return {"kind": "affine", "lambda": format_number(self.lam), "mu": mu}


_EXPR_NAMES = {
    name: getattr(math, name)
    for name in ("sin", "cos", "tan", "exp", "log", "sqrt", "atan", "tanh", "pi", "e")
}
_EXPR_NAMES.update(abs=abs, min=min, max=max)


@dataclass(frozen=True)
class ExpressionRhs:
    """f(t, y) from a float expression in t and y, e.g. 'sin(y) + t/10'."""

    text: str

    exact_capable = False

    def __post_init__(self):
        object.__setattr__(
            self, "_code", compile(self.text, "<rhs>", "eval")
        )

    def __call__(self, t, y):
        env = dict(_EXPR_NAMES)
        env.update(t=float(t), y=float(y))
        return float(eval(self._code, {"__builtins__": {}}, env))

    def to_dict(self):
        return {"kind": "expression", "text": self.text}


def rhs_from_dict(doc: dict):
    kind = doc.get("kind")
    if kind == "zero":
        return ZeroRhs()
    if kind == "affine":
        lam = parse_number(str(doc["lambda"]))
        mu = doc.get("mu", 0)
        if isinstance(mu, list):
            mu = [parse_number(str(m)) for m in mu]
        else:
            mu = parse_number(str(mu))
        return AffineRhs(lam, mu)
    if kind == "expression":
        return ExpressionRhs(doc["text"])
    raise DomainError(f"unknown rhs kind {kind!r}; expected zero, affine or expression")


# ---------------------------------------------------------------------------
# problem and trace

@dataclass(frozen=True)
class IVProblem:
    alpha: Fraction
    a: Fraction
    c: object
    rhs: object
    horizon: int
    mode: str = EXACT

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.alpha <= 0 or self.alpha.denominator == 1:
            raise DomainError(
                f"the solver needs a positive non-integer order, got {self.alpha}"
            )
        if self.horizon < 0:
            raise DomainError("horizon must be >= 0")
        if self.mode not in (EXACT, FLOAT):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.mode == EXACT:
            if mode_of(self.c) == FLOAT:
                raise ModeError("exact-mode problem with float initial value")
            if not getattr(self.rhs, "exact_capable", False):
                raise DomainError(
                    "exact mode supports zero and affine right-hand sides only"
                )
        else:
            object.__setattr__(self, "c", float(self.c))

    @property
    def n(self) -> int:
        return ceil_scalar(self.alpha)

    @property
    def start(self) -> Fraction:
        """a(alpha) = a + n - 1, the point carrying the initial condition."""
        return self.a + self.n - 1

    def rhs_value(self, k: int, t, y):
        if isinstance(self.rhs, AffineRhs):
            return self.rhs.value(k, y)
        return self.rhs(t, y)

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": format_number(self.alpha),
                "a": format_number(self.a),
                "c": format_number(self.c),
                "rhs": self.rhs.to_dict(),
                "horizon": self.horizon,
                "mode": self.mode,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "IVProblem":
        doc = json.loads(text)
        mode = doc.get("mode", EXACT)
        c = parse_number(str(doc.get("c", 0)))
        return cls(
            alpha=parse_rational(str(doc["alpha"])),
            a=parse_rational(str(doc.get("a", 0))),
            c=c,
            rhs=rhs_from_dict(doc.get("rhs", {"kind": "zero"})),
            horizon=int(doc.get("horizon", 0)),
            mode=mode,
        )


@dataclass(frozen=True)
class SolutionTrace:
    y: GridFunction
    iterations: tuple

    @property
    def values(self):
        return self.y.values

    def to_csv(self, comments=None) -> str:
        lines = [f"# {c}" for c in comments or []]
        lines.append("k,t,y")
        for k, v in enumerate(self.y.values):
            lines.append(f"{k},{format_number(self.y.point(k))},{format_number(v)}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# stepping

def solve(p: IVProblem, tol: float = 1e-12, max_iter: int = 200) -> SolutionTrace:
    w = gbinom_weights(
        p.alpha if p.mode == EXACT else float(p.alpha), p.horizon + 1
    )
    ys = [p.c]
    iters = [0]
    for k in range(1, p.horizon + 1):
        f_k = p.c * w[k]
        for j in range(1, k):
            t_j = p.start + j
            f_k = f_k + w[k - j] * p.rhs_value(j, t_j, ys[j])
        t_k = p.start + k
        y_k, it = _implicit_step(p, k, t_k, f_k, tol, max_iter)
        ys.append(y_k)
        iters.append(it)
    return SolutionTrace(GridFunction(p.start, LEFT, ys), tuple(iters))


def _implicit_step(p, k, t_k, f_k, tol, max_iter):
    """Solve y = f_k + f(t_k, y); the unknown's kernel weight is gbinom(alpha,0)=1."""
    if isinstance(p.rhs, ZeroRhs):
        return f_k, 0
    if isinstance(p.rhs, AffineRhs):
        denom = 1 - p.rhs.lam
        if denom == 0:
            raise SingularStepError(
                f"affine step at t = {format_number(t_k)} has slope 1 (1 - lambda = 0)"
            )
        return (f_k + p.rhs.mu_at(k)) / denom, 1
    # general float rhs: damped fixed point, then bisection fallback
    y = float(f_k)
    for it in range(1, max_iter + 1):
        nxt = 0.5 * (y + f_k + p.rhs(t_k, y))
        if abs(nxt - y) <= tol * max(1.0, abs(nxt)):
            return nxt, it
        y = nxt
    root = _bisect(lambda v: v - f_k - p.rhs(t_k, v), y, tol, max_iter)
    if root is None:
        raise ConvergenceError(
            f"implicit step at t = {format_number(t_k)} did not converge "
            f"within {max_iter} iterations (last iterate {y!r})",
            y,
        )
    return root, max_iter


def _bisect(g, guess, tol, max_iter):
    lo, hi = guess - 1.0, guess + 1.0
    for _ in range(60):  # expand until the root is bracketed
        if g(lo) * g(hi) <= 0:
            break
        lo, hi = 2 * lo - guess, 2 * hi - guess
    else:
        return None
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if abs(gm) <= tol or hi - lo <= tol:
            return mid
        if g(lo) * gm <= 0:
            hi = mid
        else:
            lo = mid
    return None


def residual(p: IVProblem, trace: SolutionTrace):
    """Max defect of the difference equation over the trace.

    The equation's operator anchors one point before the initial condition;
    the anchor value never enters the sum, so a conventional zero is stored
    there.
    """
    if len(trace.y) < 2:
        raise DomainError("trace too short to evaluate the difference equation")
    g = GridFunction(p.start - 1, LEFT, (zero(p.mode),) + trace.y.values)
    d = nabla_left_diff(g, p.alpha)
    worst = zero(p.mode)
    for k in range(1, p.horizon + 1):
        t = p.start + k
        defect = abs(d.at(t) - p.rhs_value(k, t, trace.y.values[k]))
        if defect > worst:
            worst = defect
    return worst


# ---------------------------------------------------------------------------
# the two homogeneous-part representations and their telescoping chain

def representation_terms(p: IVProblem, t):
    """(multi-term value, single-term value) of the homogeneous part at t.

    The multi-term form is the n-fold-difference kernel plus the n correction
    terms; the single-term form is the collapsed kernel. On the solution
    lattice both reduce to gbinom expressions and agree exactly.
    """
    chain = representation_chain(p, t)
    return chain[0], chain[-1]


def representation_chain(p: IVProblem, t):
    """Successive collapses of the multi-term homogeneous part at t.

    Entry m combines the first m correction terms into the leading kernel:
    entry 0 is the full multi-term form, entry n the single-term form, and
    consecutive entries are equal by the kernel recurrence
    gbinom(beta, j) + gbinom(beta + 1, j - 1) = gbinom(beta + 1, j).
    """
    if p.alpha <= 1:
        raise DomainError("the multi-term representation needs order > 1")
    j = Fraction(t) - p.start
    if j.denominator != 1 or j < 0:
        raise DomainError(f"{t} is not on the solution lattice from {p.start}")
    j = int(j)
    n = p.n
    alpha = p.alpha if p.mode == EXACT else float(p.alpha)
    chain = []
    for m in range(n + 1):
        lead = p.c * kernel_value(alpha - n + m, j)
        tail = sum(
            p.c * kernel_value(alpha - n + k + 1, j - 1) for k in range(m, n)
        )
        chain.append(lead + tail)
    return chain


def homogeneous_value(p: IVProblem, k: int):
    """y(a(alpha) + k) for f = 0: just c * gbinom(alpha, k)."""
    alpha = p.alpha if p.mode == EXACT else float(p.alpha)
    return p.c * gbinom(alpha, k)
