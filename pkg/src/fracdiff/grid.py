"""Functions on integer-step lattices.

A left-oriented GridFunction stores f on {a, a+1, ...} with index i holding
f(a + i); a right-oriented one stores f on {b, b-1, ...} with index i holding
f(b - i). The base may be any rational (shifted lattices such as alpha - n
occur in the dual identities), but steps are always exactly 1.

Operator outputs extend by zero on the base side of their anchor; that is
the standard empty-sum convention and is what `at(..., zero_ext=True)`
implements. Points beyond the stored window on the far side are errors, not
silent zeros.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    EXACT,
    DomainError,
    common_mode,
    format_number,
    parse_number,
    zero,
)

LEFT = "left"
RIGHT = "right"


class WindowError(IndexError):
    """A lattice point outside the stored (or valid) window was requested."""


def sigma(t):
    """Forward jump: sigma(t) = t + 1."""
    return t + 1


def rho(t):
    """Backward jump: rho(t) = t - 1."""
    return t - 1


@dataclass(frozen=True)
class GridFunction:
    base: Fraction
    orientation: str
    values: tuple

    def __post_init__(self):
        if self.orientation not in (LEFT, RIGHT):
            raise DomainError(f"orientation must be left or right: {self.orientation}")
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise DomainError("a grid function needs at least one value")
        common_mode(*self.values)

    @property
    def mode(self) -> str:
        return common_mode(*self.values)

    def __len__(self):
        return len(self.values)

    @property
    def step(self) -> int:
        return 1 if self.orientation == LEFT else -1

    def point(self, i: int) -> Fraction:
        return self.base + self.step * i

    def points(self):
        return [self.point(i) for i in range(len(self))]

    def index_of(self, t) -> int:
        offset = (Fraction(t) - self.base) * self.step
        if offset.denominator != 1:
            raise WindowError(f"{t} is not on the lattice anchored at {self.base}")
        return int(offset)

    def __contains__(self, t) -> bool:
        try:
            i = self.index_of(t)
        except WindowError:
            return False
        return 0 <= i < len(self)

    def at(self, t, zero_ext: bool = False):
        """Value at lattice point t.

        With zero_ext, points on the base side of the anchor (before a /
        after b) return 0 per the empty-sum convention; far-side points
        always raise WindowError.
        """
        i = self.index_of(t)
        if 0 <= i < len(self):
            return self.values[i]
        if zero_ext and i < 0:
            return zero(self.mode)
        raise WindowError(
            f"point {t} outside stored window [{self.point(0)}..{self.point(len(self) - 1)}]"
        )

    def with_values(self, values) -> "GridFunction":
        return GridFunction(self.base, self.orientation, tuple(values))

    def restrict(self, new_base) -> "GridFunction":
        """Drop points on the base side so the anchor moves to new_base."""
        k = self.index_of(new_base)
        if not 0 <= k < len(self):
            raise WindowError(f"new base {new_base} not inside the stored window")
        return GridFunction(Fraction(new_base), self.orientation, self.values[k:])

    def zero_extend(self, n: int) -> "GridFunction":
        """Materialize n conventional zeros on the base side."""
        if n < 0:
            raise DomainError("zero_extend needs n >= 0")
        if n == 0:
            return self
        z = zero(self.mode)
        return GridFunction(
            self.base - self.step * n, self.orientation, (z,) * n + self.values
        )


def q_reflect(f: GridFunction) -> GridFunction:
    """The reflection (Qf)(s) = f(a + b - s) over the stored window [a, b].

    Orientation flips and the anchor moves to the opposite end; the value
    tuple is unchanged because index i measures distance from the anchor on
    both sides.
    """
    far = f.point(len(f) - 1)
    other = RIGHT if f.orientation == LEFT else LEFT
    return GridFunction(far, other, f.values)


def reorient(f: GridFunction) -> GridFunction:
    """The same function stored with the opposite orientation and anchor."""
    far = f.point(len(f) - 1)
    other = RIGHT if f.orientation == LEFT else LEFT
    return GridFunction(far, other, tuple(reversed(f.values)))


SUM_TAGS = ("delta-left-sum", "delta-right-sum", "nabla-left-sum", "nabla-right-sum")
DIFF_TAGS = ("delta-left-diff", "delta-right-diff", "nabla-left-diff", "nabla-right-diff")
OPERATOR_TAGS = SUM_TAGS + DIFF_TAGS


@dataclass(frozen=True)
class DomainSpec:
    """Where a function (or an operator output) lives.

    first_valid_index marks the first point the defining formula produces;
    definitional_first_valid records the (sometimes tighter, sometimes
    looser) window written in the operator's definition when the two
    disagree, as they do for the nabla differences.
    """

    base: Fraction
    orientation: str
    first_valid_index: int = 0
    definitional_first_valid: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.orientation not in (LEFT, RIGHT):
            raise DomainError(f"bad orientation {self.orientation}")


def operator_domain(kind: str, order, input_spec: DomainSpec) -> DomainSpec:
    """Codomain lattice of one of the eight fractional operators."""
    from .scalars import Order

    if not isinstance(order, Order):
        order = Order(order)
    alpha = Fraction(order.alpha) if order.mode == EXACT else Fraction(str(order.alpha))
    n = order.n
    base, orient = input_spec.base, input_spec.orientation
    s = 1 if orient == LEFT else -1

    if kind == "delta-left-sum" or kind == "delta-right-sum":
        _need(kind, orient)
        return DomainSpec(base + s * alpha, orient, 0)
    if kind == "nabla-left-sum" or kind == "nabla-right-sum":
        _need(kind, orient)
        return DomainSpec(base, orient, 1)
    if kind == "delta-left-diff" or kind == "delta-right-diff":
        _need(kind, orient)
        return DomainSpec(base + s * (n - alpha), orient, 0)
    if kind == "nabla-left-diff" or kind == "nabla-right-diff":
        _need(kind, orient)
        return DomainSpec(base, orient, n, definitional_first_valid=1)
    raise DomainError(f"unknown operator kind {kind!r}")


def _need(kind: str, orient: str):
    want = LEFT if "left" in kind else RIGHT
    if orient != want:
        raise DomainError(f"{kind} needs a {want}-oriented function, got {orient}")


# ---------------------------------------------------------------------------
# serialization: CSV with header `index,t,value`, and a JSON mirror

def to_csv(f: GridFunction, comments: list[str] | None = None) -> str:
    buf = io.StringIO()
    for line in comments or []:
        buf.write(f"# {line}\n")
    buf.write("index,t,value\n")
    for i, v in enumerate(f.values):
        buf.write(f"{i},{format_number(f.point(i))},{format_number(v)}\n")
    return buf.getvalue()


def from_csv(text: str) -> GridFunction:
    points, values = [], []
    lineno = 0
    header_seen = False
    for raw in text.splitlines():
        lineno += 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != "index,t,value":
                raise DomainError(f"line {lineno}: expected header 'index,t,value'")
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise DomainError(f"line {lineno}: expected 3 fields, got {len(parts)}")
        try:
            idx = int(parts[0])
            t = parse_number(parts[1])
            v = parse_number(parts[2])
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"line {lineno}: {exc}") from exc
        if idx != len(points):
            raise DomainError(f"line {lineno}: indices must run 0,1,2,...")
        points.append(Fraction(t) if not isinstance(t, float) else Fraction(str(t)))
        values.append(v)
    if not points:
        raise DomainError("no data rows")
    if len(points) == 1:
        orientation = LEFT
    else:
        step = points[1] - points[0]
        if step == 1:
            orientation = LEFT
        elif step == -1:
            orientation = RIGHT
        else:
            raise DomainError(f"lattice step must be +-1, got {step}")
        for i in range(1, len(points)):
            if points[i] - points[i - 1] != step:
                raise DomainError(f"non-uniform lattice at row {i}")
    return GridFunction(points[0], orientation, values)


def to_json(f: GridFunction) -> str:
    doc = {
        "orientation": f.orientation,
        "base": format_number(f.base),
        "mode": f.mode,
        "points": [
            {"index": i, "t": format_number(f.point(i)), "value": format_number(v)}
            for i, v in enumerate(f.values)
        ],
    }
    return json.dumps(doc, indent=2)


def from_json(text: str) -> GridFunction:
    doc = json.loads(text)
    values = [parse_number(p["value"]) for p in doc["points"]]
    return GridFunction(Fraction(doc["base"]), doc["orientation"], values)
