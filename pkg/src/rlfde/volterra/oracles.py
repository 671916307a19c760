"""Independent checks for computed solutions."""

from __future__ import annotations

import math

import mpmath
import numpy as np

from rlfde.analysis import EquationSpec, normalize
from rlfde.orders import OrderLike, as_order, rgamma, rl_derivative_power
from rlfde.volterra.solver import GridSolution

_ML_MAX_TERMS = 10_000
_ML_RTOL = 1e-13
# alternating sums need their terms to get this small before they are done
_ML_LOG_TAIL = math.log(1e-30)


class ConvergenceError(ArithmeticError):
    """A series did not reach its tolerance within the allowed number of terms."""


def _log_term(alpha: float, beta: float, log_z: float, k: int) -> float:
    x = alpha * k + beta
    if x <= 0 and x == math.floor(x):
        return -math.inf
    return k * log_z - math.lgamma(x)


def mittag_leffler(alpha: float, beta: float, z: float) -> float:
    r"""Two-parameter Mittag-Leffler function.

    .. math::

        E_{\alpha, \beta}(z) = \sum_{k = 0}^\infty \frac{z^k}{\Gamma(\alpha k + \beta)}

    The series is summed in double precision when it has no cancellation to
    speak of (``z >= 0`` or all terms of moderate size). Otherwise it is summed
    with :mod:`mpmath` at a working precision large enough to absorb the
    cancellation between the largest terms.
    """
    alpha = float(alpha)
    beta = float(beta)
    z = float(z)
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if abs(z) > 50:
        raise ValueError(f"|z| must be at most 50, got {z}")
    if z == 0.0:
        return rgamma(beta)

    # size of the largest term decides how much precision the sum needs, and
    # for z < 0 the position of the tail decides whether the guard trips
    log_z = math.log(abs(z))
    k_peak = 0
    log_peak = -math.inf
    for k in range(_ML_MAX_TERMS):
        lt = _log_term(alpha, beta, log_z, k)
        if lt > log_peak:
            log_peak, k_peak = lt, k
        elif k > k_peak + 5 and lt < log_peak - 60 and (z > 0 or lt < _ML_LOG_TAIL):
            break
    else:
        raise ConvergenceError(
            f"Mittag-Leffler series for z = {z} needs more than {_ML_MAX_TERMS} terms"
        )

    if z > 0 or log_peak < math.log(10.0):
        return _ml_float(alpha, beta, z)
    return _ml_extended(alpha, beta, z, log_peak)


def _ml_float(alpha: float, beta: float, z: float) -> float:
    terms = []
    power = 1.0
    total = 0.0
    small = 0
    for k in range(_ML_MAX_TERMS):
        term = power * rgamma(alpha * k + beta)
        terms.append(term)
        total += term
        if abs(term) <= _ML_RTOL * abs(total) and k > 0:
            small += 1
            if small >= 3:
                return math.fsum(terms)
        else:
            small = 0
        power *= z
        if not math.isfinite(power):
            break
    raise ConvergenceError(f"Mittag-Leffler series did not converge at z = {z}")


def _ml_extended(alpha: float, beta: float, z: float, log_peak: float) -> float:
    digits = 20 + int(log_peak / math.log(10.0))
    with mpmath.workdps(digits):
        za = mpmath.mpf(z)
        a = mpmath.mpf(alpha)
        b = mpmath.mpf(beta)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        small = 0
        tol = mpmath.mpf(_ML_RTOL) / 1000
        for k in range(_ML_MAX_TERMS):
            term = power * mpmath.rgamma(a * k + b)
            total += term
            if k > 0 and abs(term) <= tol * abs(total):
                small += 1
                if small >= 3:
                    return float(total)
            else:
                small = 0
            power *= za
    raise ConvergenceError(f"Mittag-Leffler series did not converge at z = {z}")


def grunwald_weights(alpha: float, n: int) -> np.ndarray:
    """First *n* Grünwald-Letnikov weights ``(-1)^k binom(alpha, k)``."""
    w = np.empty(n)
    w[0] = 1.0
    for k in range(1, n):
        w[k] = w[k - 1] * (1.0 - (alpha + 1.0) / k)
    return w


def gl_derivative(solution: GridSolution, alpha: OrderLike) -> np.ndarray:
    """Samples of ``D^alpha u`` at the grid nodes.

    The singular part is differentiated exactly. The regular samples, together
    with the value at the origin, go through the Grünwald-Letnikov difference
    quotient, which is first order accurate away from ``t = 0``. Negative
    orders give fractional integrals.
    """
    alpha = as_order(alpha)
    if alpha == 0:
        return solution.values()

    a = float(alpha)
    h = solution.step
    n = solution.size

    y = np.concatenate([[solution.regular_origin], solution.regular_samples])
    weights = grunwald_weights(a, n + 1)
    regular = np.convolve(weights, y)[1 : n + 1] / h**a

    singular = rl_derivative_power(alpha, solution.singular_part)(solution.nodes)
    return singular + regular


def residual(solution: GridSolution, spec: EquationSpec) -> float:
    """Max of ``|sum_j c_j D^{beta_j} u - w|`` over the nodes in ``[b/10, b]``."""
    spec = normalize(spec)
    t = solution.nodes
    mask = t >= solution.interval_end / 10 * (1 - 1e-12)

    lhs = np.zeros(int(mask.sum()))
    for q, c in zip(spec.orders, spec.coefficients):
        if c == 0.0:
            continue
        lhs += c * gl_derivative(solution, q)[mask]

    w = spec.rhs(t[mask])
    return float(np.max(np.abs(lhs - w)))


def relaxation_solution(t, rate: float = 1.0, order: OrderLike = "1/2") -> np.ndarray:
    r"""Solution of ``D^q u + rate u = 0`` with ``I^{1-q} u(0) = 1``, ``0 < q < 1``.

    It is ``t^(q-1) E_{q,q}(-rate t^q)``.
    """
    q = float(as_order(order))
    if not 0 < q < 1:
        raise ValueError("order must lie in (0, 1)")
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    return np.array(
        [ti ** (q - 1) * mittag_leffler(q, q, -rate * ti**q) for ti in t]
    )


__all__ = [
    "ConvergenceError",
    "gl_derivative",
    "grunwald_weights",
    "mittag_leffler",
    "relaxation_solution",
    "residual",
]
