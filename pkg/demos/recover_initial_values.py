"""
Reading initial values off a computed solution
==============================================

Solve the first worked equation from a chosen source, then evaluate
``I^{2/3}u``, ``D^{1/3}u`` and ``D^{4/3}u`` near the origin numerically and
compare with what the triangular system predicts.
"""

import numpy as np

from rlfde import analyze, build_problem, gl_derivative, solve_volterra
from rlfde.dsl import parse_equation
from rlfde.icmap import source_to_ic

spec = parse_equation("D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = t^3")
report = analyze(spec)

b = np.array([0.4, 2.8, 3.8])
solution = solve_volterra(build_problem(spec, b), 4096)

# Grünwald-Letnikov derivatives lose accuracy right at t = 0, so fit a cubic
# on [0.05, 0.5] and extrapolate.
t = solution.nodes
window = (t >= 0.05) & (t <= 0.5)
predicted = source_to_ic(b, spec, report)
for label, q, a in zip(report.describe_initial_values(), report.ic_orders, predicted):
    values = gl_derivative(solution, q)
    fitted = np.polynomial.Polynomial.fit(t[window], values[window], 3)(0.0)
    print(f"{label:>12}: predicted {a: .5f}  numerical {fitted: .5f}")
