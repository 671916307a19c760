"""Shared equations, random corpora and independent oracles for the tests."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
from scipy import integrate

from rlfde import EquationSpec, PowerSum
from rlfde.orders import apply_upsilon

EXAMPLE_1_TEXT = "D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = t^3"
EXAMPLE_2_TEXT = "D^{13/4} u + 3*D^{9/4} u + D^{2} u + D^{5/4} u + D^{1} u = t"
RELAXATION_TEXT = "D^{1/2} u + u = 0"


def example_1() -> EquationSpec:
    return EquationSpec(
        (Fraction(1, 3), Fraction(4, 3), Fraction(7, 3)),
        (4.0, 3.0, 1.0),
        PowerSum.monomial(1.0, 3),
    )


def example_2() -> EquationSpec:
    return EquationSpec(
        (Fraction(1), Fraction(5, 4), Fraction(2), Fraction(9, 4), Fraction(13, 4)),
        (1.0, 1.0, 1.0, 3.0, 1.0),
        PowerSum.monomial(1.0, 1),
    )


def relaxation() -> EquationSpec:
    return EquationSpec((Fraction(0), Fraction(1, 2)), (1.0, 1.0))


def random_order(rng, low=0, high=5, max_denominator=12) -> Fraction:
    d = int(rng.integers(1, max_denominator + 1))
    return Fraction(int(rng.integers(low * d, high * d + 1)), d)


def random_orders(rng, max_n=6, max_top=5, max_denominator=12) -> tuple[Fraction, ...]:
    """Strictly increasing orders in ``[0, max_top]`` with a positive top."""
    while True:
        n = int(rng.integers(1, max_n + 1))
        orders = set()
        while len(orders) < n:
            orders.add(random_order(rng, 0, max_top, max_denominator))
        orders = sorted(orders)
        if orders[-1] > 0:
            return tuple(orders)


def random_spec(rng, coefficient_scale=1.0, **kwargs) -> EquationSpec:
    """Random normalized spec; lower coefficients uniform in ``[-scale, scale]``."""
    orders = random_orders(rng, **kwargs)
    lower = rng.uniform(-coefficient_scale, coefficient_scale, len(orders) - 1)
    return EquationSpec(orders, tuple(lower) + (1.0,))


def random_power_sum(rng, size=None, max_denominator=12) -> PowerSum:
    size = int(rng.integers(1, 5)) if size is None else size
    terms = []
    for _ in range(size):
        d = int(rng.integers(1, max_denominator + 1))
        exponent = Fraction(int(rng.integers(-d + 1, 4 * d)), d)
        terms.append((float(rng.uniform(-3, 3)), exponent))
    return PowerSum(tuple(terms))


def neumann_series(kernel_terms, rhs: PowerSum, tol=1e-17, max_terms=400) -> PowerSum:
    """Exact-series solution ``sum_k (-Upsilon)^k rhs`` of ``(Upsilon + Id) u = rhs``.

    Only meaningful on ``[0, 1]``, where the terms are bounded by their
    coefficients.
    """
    total = rhs
    term = rhs
    for _ in range(max_terms):
        term = -apply_upsilon(kernel_terms, term)
        if not term or max(abs(c) for c in term.coefficients) < tol:
            return total + term
        total = total + term
    raise RuntimeError("series did not converge")


def mp_mittag_leffler(alpha, beta, z, dps=50) -> float:
    """Brute-force series in 50-digit arithmetic."""
    with mpmath.workdps(dps):
        a, b, z = mpmath.mpf(alpha), mpmath.mpf(beta), mpmath.mpf(z)
        return float(mpmath.nsum(lambda k: z**k * mpmath.rgamma(a * k + b), [0, mpmath.inf]))


def quad_rl_integral_power(alpha: float, exponent: float, x: float) -> float:
    r"""``I^alpha t^exponent`` at ``x`` by adaptive quadrature with algebraic weights."""
    value, _ = integrate.quad(
        lambda s: 1.0,
        0.0,
        x,
        weight="alg",
        wvar=(exponent, alpha - 1.0),
        epsabs=0,
        epsrel=1e-13,
        limit=200,
    )
    return value / float(mpmath.gamma(alpha))
