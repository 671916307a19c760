"""Integral form, smoothing, discretization and verification."""

from rlfde.volterra.oracles import (
    ConvergenceError,
    gl_derivative,
    grunwald_weights,
    mittag_leffler,
    relaxation_solution,
    residual,
)
from rlfde.volterra.problem import (
    VolterraProblem,
    build_problem,
    neumann_passes,
    neumann_smooth,
)
from rlfde.volterra.solver import (
    GridSolution,
    IllConditionedError,
    discretization_diagonal,
    moment_weights,
    solve_volterra,
)

__all__ = [
    "ConvergenceError",
    "GridSolution",
    "IllConditionedError",
    "VolterraProblem",
    "build_problem",
    "discretization_diagonal",
    "gl_derivative",
    "grunwald_weights",
    "mittag_leffler",
    "moment_weights",
    "neumann_passes",
    "neumann_smooth",
    "relaxation_solution",
    "residual",
    "solve_volterra",
]
