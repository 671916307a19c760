"""Initial values and numerical solutions for linear Riemann-Liouville
fractional differential equations with constant coefficients."""

from rlfde.analysis import (
    AnalysisReport,
    EquationSpec,
    ICKind,
    analyze,
    check_strong_membership,
    compute_beta_star,
    normalize,
)
from rlfde.icmap import ic_to_source, integer_gap_coefficients, source_to_ic
from rlfde.orders import (
    GammaPoleError,
    PowerSum,
    apply_upsilon,
    as_order,
    format_order,
    gamma,
    is_in_image,
    rl_derivative_power,
    rl_integral_power,
)
from rlfde.sampled import SampledFunction
from rlfde.volterra import (
    GridSolution,
    VolterraProblem,
    build_problem,
    gl_derivative,
    mittag_leffler,
    neumann_smooth,
    residual,
    solve_volterra,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "EquationSpec",
    "GammaPoleError",
    "GridSolution",
    "ICKind",
    "PowerSum",
    "SampledFunction",
    "VolterraProblem",
    "analyze",
    "apply_upsilon",
    "as_order",
    "build_problem",
    "check_strong_membership",
    "compute_beta_star",
    "format_order",
    "gamma",
    "gl_derivative",
    "ic_to_source",
    "integer_gap_coefficients",
    "is_in_image",
    "mittag_leffler",
    "neumann_smooth",
    "normalize",
    "residual",
    "rl_derivative_power",
    "rl_integral_power",
    "solve_volterra",
    "source_to_ic",
]
