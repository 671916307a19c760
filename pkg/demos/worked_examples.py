"""
Initial values of two worked equations
======================================

How many initial values does a Riemann-Liouville equation take, and of which
orders? The answer depends only on which gaps to the highest order are
integers.
"""

from rlfde import analyze
from rlfde.dsl import parse_equation
from rlfde.icmap import ic_to_source, source_to_ic

# All gaps to 7/3 are integers, so beta_* = 0 and three initial values are
# needed. The lowest one is a fractional integral, not a derivative.
first = parse_equation("D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = t^3")
report = analyze(first)
print("beta_* =", report.beta_star, " m =", report.m)
print("initial values:", ", ".join(report.describe_initial_values()))

# Here 2 is the largest order at a non-integer distance from 13/4, so only
# two initial values can be prescribed. The kernel of D^{13/4} has four
# powers of t but only the leading two give strong solutions.
second = parse_equation("D^{13/4} u + 3*D^{9/4} u + D^{2} u + D^{5/4} u + D^{1} u = t")
report = analyze(second)
print("beta_* =", report.beta_star, " m =", report.m)
print("initial values:", ", ".join(report.describe_initial_values()))
print("strong sources: t^" + ", t^".join(map(str, report.strong_basis_exponents)))
print("weak kernel:    t^" + ", t^".join(map(str, report.kernel_basis_exponents)))

# Initial values map to source coefficients of the integral form through a
# unit lower triangular system. The coefficient 3 of D^{9/4} couples the rows.
b = ic_to_source([1.0, 0.0], second)
print("a = (1, 0)  ->  b =", b)
print("and back    ->  a =", source_to_ic(b, second))
