r"""Integral form of the equation and exact smoothing of singular sources.

Left-factoring :math:`D^{\beta_n}` turns the differential equation into the
second-kind Volterra equation

.. math::

    (\Upsilon + \mathrm{Id}) u = I^{\beta_n} w + f, \qquad
    \Upsilon = \sum_{j < n} c_j I^{\beta_n - \beta_j},

with ``f`` in the kernel of :math:`D^{\beta_n}`. The source ``f`` usually has
negative powers of ``t``. Since :math:`\Upsilon` acts exactly on power sums,
those can be peeled off: writing ``u = S + y`` with ``S`` an explicit power sum
leaves an equation for ``y`` whose right-hand side is continuous.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from rlfde.analysis import EquationSpec, analyze, normalize
from rlfde.orders import (
    KernelTerm,
    PowerSum,
    apply_upsilon,
    as_order,
    gamma,
    rl_integral_power,
)
from rlfde.sampled import SampledFunction, SampledIntegral

RegularRhs = Union[PowerSum, SampledIntegral]


@dataclass(frozen=True)
class VolterraProblem:
    """``(Upsilon + Id) u = rhs_regular + rhs_singular`` on ``[0, interval_end]``."""

    kernel_terms: tuple[KernelTerm, ...]
    rhs_regular: RegularRhs
    rhs_singular: PowerSum
    interval_end: float

    def __post_init__(self) -> None:
        terms = tuple((float(c), as_order(g)) for c, g in self.kernel_terms)
        if any(g <= 0 for _, g in terms):
            raise ValueError("kernel gaps must be positive")
        if not self.interval_end > 0:
            raise ValueError(f"interval end must be positive, got {self.interval_end}")
        object.__setattr__(self, "kernel_terms", terms)

    @property
    def smallest_gap(self) -> Fraction | None:
        return min((g for _, g in self.kernel_terms), default=None)

    def kernel(self, t):
        """Convolution kernel ``K(t) = sum_j c_j t^(gap_j - 1) / Gamma(gap_j)``."""
        return PowerSum(
            tuple((c / gamma(float(g)), g - 1) for c, g in self.kernel_terms)
        )(t)

    def rhs(self, t):
        """Right-hand side evaluated at *t*."""
        return np.asarray(self.rhs_regular(t)) + self.rhs_singular(t)


def build_problem(
    spec: EquationSpec,
    f: PowerSum | Sequence[float] | None = None,
    b: float = 1.0,
) -> VolterraProblem:
    """Integral form of *spec* on ``[0, b]``.

    *f* is either a :class:`PowerSum` in the kernel of ``D^{beta_n}`` or the
    vector of its coefficients on the strong basis (lowest power first, as
    returned by :func:`rlfde.icmap.ic_to_source`).
    """
    if not b > 0:
        raise ValueError(f"interval end must be positive, got {b}")
    spec = normalize(spec)
    top = spec.top_order

    if f is None:
        f = PowerSum()
    elif not isinstance(f, PowerSum):
        report = analyze(spec)
        coefficients = np.asarray(f, dtype=np.float64)
        if coefficients.shape != (report.m,):
            raise ValueError(
                f"expected {report.m} source coefficients, got {coefficients.size}"
            )
        f = PowerSum.from_coefficients(list(coefficients), report.ic_orders)

    kernel = tuple(
        (c, top - q)
        for q, c in zip(spec.orders[:-1], spec.coefficients[:-1])
        if c != 0.0
    )

    if isinstance(spec.rhs, SampledFunction):
        if spec.rhs.end < b * (1 - 1e-12):
            raise ValueError(
                f"sampled right-hand side ends at {spec.rhs.end}, before b = {b}"
            )
        regular: RegularRhs = spec.rhs.integral(top)
    else:
        regular = rl_integral_power(top, spec.rhs)

    return VolterraProblem(kernel, regular, f, float(b))


def _passes(problem: VolterraProblem) -> Iterator[tuple[PowerSum, PowerSum]]:
    moved = problem.rhs_singular
    if isinstance(problem.rhs_regular, PowerSum):
        below, _ = problem.rhs_regular.split(0)
        moved = moved + below

    while moved:
        image = -apply_upsilon(problem.kernel_terms, moved)
        below, rest = image.split(0)
        yield moved, rest
        moved = below


def neumann_passes(problem: VolterraProblem) -> Iterator[PowerSum]:
    """Yield the power sums peeled off by successive smoothing passes.

    The first pass takes the whole singular source; later passes take the part
    of ``-Upsilon`` (previous pass) that still has negative exponents. Each pass
    raises the smallest exponent by at least the smallest kernel gap, so the
    sequence is finite.
    """
    for moved, _ in _passes(problem):
        yield moved


def neumann_smooth(problem: VolterraProblem) -> tuple[PowerSum, VolterraProblem]:
    """Split ``u = S + y`` with ``S`` explicit and ``y`` solving a continuous problem.

    Returns ``S`` and the problem for ``y``: same kernel, regular part with any
    negative powers removed, and a singular part holding only nonnegative
    powers.
    """
    regular = problem.rhs_regular
    if isinstance(regular, PowerSum):
        _, regular = regular.split(0)

    accumulated = PowerSum()
    continuous = PowerSum()
    for moved, rest in _passes(problem):
        accumulated = accumulated + moved
        continuous = continuous + rest

    residual = replace(problem, rhs_regular=regular, rhs_singular=continuous)
    return accumulated, residual
