"""
Fractional relaxation
=====================

``D^{1/2} u + u = 0`` with ``I^{1/2} u(0) = 1`` has the solution
``t^{-1/2} E_{1/2,1/2}(-t^{1/2})``. The solver removes the ``t^{-1/2}``
singularity exactly and discretizes the continuous rest, so the error
away from the origin halves with every grid refinement.
"""

import numpy as np

from rlfde import build_problem, ic_to_source, solve_volterra
from rlfde.dsl import parse_equation
from rlfde.volterra import relaxation_solution

spec = parse_equation("D^{1/2} u + u = 0")
problem = build_problem(spec, ic_to_source([1.0], spec))

# the exactly known part of the solution
print("singular part:", solve_volterra(problem, 16).singular_part)

previous = None
for n in (128, 256, 512, 1024, 2048, 4096):
    solution = solve_volterra(problem, n)
    t = solution.nodes
    mask = t >= 0.1
    error = np.max(np.abs(solution.values()[mask] / relaxation_solution(t[mask]) - 1))
    ratio = "" if previous is None else f"  ratio {previous / error:.2f}"
    print(f"N = {n:5d}  relative error {error:.2e}{ratio}")
    previous = error
