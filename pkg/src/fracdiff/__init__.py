"""Discrete fractional calculus on integer-step lattices.

Eight fractional sum/difference operators (delta and nabla, left and right),
a registry of exactly-verified operator identities, and a forward-stepping
solver for fractional initial value problems. Exact mode runs entirely in
rational arithmetic; float mode shadows it through a compiled convolution
kernel when available.
"""

from ._accel import BACKEND
from .grid import (
    LEFT,
    RIGHT,
    OPERATOR_TAGS,
    DomainSpec,
    GridFunction,
    WindowError,
    from_csv,
    from_json,
    operator_domain,
    q_reflect,
    reorient,
    rho,
    sigma,
    to_csv,
    to_json,
)
from .identities import (
    REGISTRY,
    CheckConfig,
    CheckReport,
    check_ids,
    run_check,
    run_suite,
)
from .kernels import (
    PoleError,
    falling_factorial,
    gbinom,
    gbinom_weights,
    kernel_value,
    rising_factorial,
)
from .operators import (
    INCLUSIVE,
    STANDARD,
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
from .scalars import (
    EXACT,
    FLOAT,
    DomainError,
    ModeError,
    Order,
    format_number,
    parse_number,
    parse_rational,
)
from .solver import (
    AffineRhs,
    ConvergenceError,
    ExpressionRhs,
    IVProblem,
    SingularStepError,
    SolutionTrace,
    ZeroRhs,
    representation_chain,
    representation_terms,
    residual,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LEFT",
    "RIGHT",
    "OPERATOR_TAGS",
    "DomainSpec",
    "GridFunction",
    "WindowError",
    "from_csv",
    "from_json",
    "operator_domain",
    "q_reflect",
    "reorient",
    "rho",
    "sigma",
    "to_csv",
    "to_json",
    "REGISTRY",
    "CheckConfig",
    "CheckReport",
    "check_ids",
    "run_check",
    "run_suite",
    "PoleError",
    "falling_factorial",
    "gbinom",
    "gbinom_weights",
    "kernel_value",
    "rising_factorial",
    "INCLUSIVE",
    "STANDARD",
    "apply_operator",
    "delta_diff",
    "delta_left_diff",
    "delta_left_sum",
    "delta_right_diff",
    "delta_right_sum",
    "nabla_diff",
    "nabla_left_diff",
    "nabla_left_sum",
    "nabla_right_diff",
    "nabla_right_sum",
    "EXACT",
    "FLOAT",
    "DomainError",
    "ModeError",
    "Order",
    "format_number",
    "parse_number",
    "parse_rational",
    "AffineRhs",
    "ConvergenceError",
    "ExpressionRhs",
    "IVProblem",
    "SingularStepError",
    "SolutionTrace",
    "ZeroRhs",
    "representation_chain",
    "representation_terms",
    "residual",
    "solve",
]
