"""
Weak and strong solutions
=========================

Every power in the kernel of ``D^{13/4}`` gives a solution of the integral
form of the second worked equation. Only sources built from ``t^{9/4}`` and
``t^{5/4}`` give functions that the lower order derivatives can act on.
"""

from rlfde import PowerSum, analyze, build_problem, check_strong_membership, solve_volterra
from rlfde.dsl import parse_equation
from rlfde.orders import rl_derivative_power
from rlfde.volterra import residual

spec = parse_equation("D^{13/4} u + 3*D^{9/4} u + D^{2} u + D^{5/4} u + D^{1} u = t")
report = analyze(spec)

sources = {
    "strong": PowerSum.from_coefficients([1.0, -0.5], ["5/4", "9/4"]),
    "weak": PowerSum.from_coefficients([1.0, 1.0], ["1/4", "9/4"]),
}

for name, f in sources.items():
    solution = solve_volterra(build_problem(spec, f), 512)
    print(f"{name}: f = {f}")
    print("  strong source:", check_strong_membership(f, report))
    try:
        # D^2 of the exact part needs every power above 1
        rl_derivative_power(2, solution.singular_part)
        print(f"  residual of the differential form: {residual(solution, spec):.2e}")
    except ValueError as exc:
        print("  not in the domain of D^2:", exc)
