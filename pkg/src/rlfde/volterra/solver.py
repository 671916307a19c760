"""Product-integration solver for the smoothed Volterra equation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rlfde.orders import KernelTerm, PowerSum, gamma
from rlfde.volterra.problem import VolterraProblem, neumann_smooth


class IllConditionedError(ArithmeticError):
    """The discretized system has a (nearly) vanishing diagonal."""


@dataclass(frozen=True, eq=False)
class GridSolution:
    """Solution ``u = singular_part + y`` sampled on ``t_i = i h``, ``i = 1..N``."""

    step: float
    regular_samples: np.ndarray
    """Values ``y(t_i)`` of the continuous unknown."""
    singular_part: PowerSum
    """Exactly known power-sum component of ``u``."""
    regular_origin: float = 0.0
    """``y(0)``, the limit of the continuous unknown at the origin."""
    diagonal: float = 1.0
    """Diagonal entry ``1 + w_ii`` of the discretized system."""

    def __post_init__(self) -> None:
        samples = np.asarray(self.regular_samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 2:
            raise ValueError("need at least two grid samples")
        if not np.all(np.isfinite(samples)):
            raise ValueError("grid samples must be finite")
        object.__setattr__(self, "regular_samples", samples)

    @property
    def size(self) -> int:
        return self.regular_samples.size

    @property
    def interval_end(self) -> float:
        return self.step * self.size

    @property
    def nodes(self) -> np.ndarray:
        return self.step * np.arange(1, self.size + 1)

    def singular_samples(self) -> np.ndarray:
        return self.singular_part(self.nodes)

    def values(self) -> np.ndarray:
        """Composed samples ``u(t_i)``."""
        return self.singular_samples() + self.regular_samples


def moment_weights(kernel_terms: tuple[KernelTerm, ...], step: float, n: int) -> np.ndarray:
    r"""Kernel moments for a uniform grid.

    Entry ``k`` is :math:`\int_{t_{i-k-1}}^{t_{i-k}} K(t_i - s) \,\mathrm{d}s`,
    which only depends on ``k`` for a convolution kernel. Each kernel term
    integrates in closed form:

    .. math::

        \frac{c}{\Gamma(g)} \int_{kh}^{(k+1)h} r^{g - 1} \,\mathrm{d}r
            = \frac{c\, h^g}{\Gamma(g + 1)} \left[(k + 1)^g - k^g\right].
    """
    k = np.arange(n, dtype=np.float64)
    weights = np.zeros(n)
    for c, gap in kernel_terms:
        g = float(gap)
        weights += c * step**g / gamma(g + 1.0) * ((k + 1.0) ** g - k**g)
    return weights


def discretization_diagonal(problem: VolterraProblem, n: int) -> float:
    """Diagonal ``1 + w_ii`` of the system :func:`solve_volterra` builds."""
    h = problem.interval_end / n
    return 1.0 + float(moment_weights(problem.kernel_terms, h, 1)[0])


def solve_volterra(problem: VolterraProblem, n: int = 1024) -> GridSolution:
    """Solve ``(Upsilon + Id) u = rhs`` on a uniform grid with ``n`` cells.

    Negative powers in the source are first peeled off exactly with
    :func:`~rlfde.volterra.problem.neumann_smooth`. The continuous remainder is
    taken piecewise constant on ``(t_{i-1}, t_i]`` and collocated at ``t_i``;
    the kernel moments are exact, so the lower triangular system is solved by
    forward substitution.
    """
    if n < 2:
        raise ValueError(f"need at least two grid cells, got {n}")

    singular, smooth = neumann_smooth(problem)
    h = smooth.interval_end / n
    t = h * np.arange(1, n + 1)

    g = smooth.rhs(t)
    origin = float(np.asarray(smooth.rhs(np.array([0.0])))[0])

    weights = moment_weights(smooth.kernel_terms, h, n)
    diagonal = 1.0 + weights[0]
    if abs(diagonal) < 1e-12:
        raise IllConditionedError(
            f"diagonal {diagonal:.3e} vanishes; refine the grid (n = {n})"
        )

    # y_i (1 + W_0) + sum_{j < i} W_{i-j} y_j = g_i
    lagged = weights[1:][::-1]
    y = np.empty(n)
    for i in range(n):
        history = lagged[n - 1 - i :] @ y[:i] if i else 0.0
        y[i] = (g[i] - history) / diagonal

    if not np.all(np.isfinite(y)):
        raise IllConditionedError("solution blew up during forward substitution")

    return GridSolution(
        step=h,
        regular_samples=y,
        singular_part=singular,
        regular_origin=origin,
        diagonal=diagonal,
    )
