"""Right-hand sides given as samples on a uniform grid."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from rlfde.orders import OrderLike, as_order, gamma


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Piecewise-linear interpolant of samples ``values`` at uniform ``t``.

    The grid must start at ``t = 0``.
    """

    t: np.ndarray
    values: np.ndarray
    source: str | None = None
    """Where the samples were read from, if anywhere."""

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        if t.ndim != 1 or t.shape != values.shape:
            raise ValueError("sample times and values must be 1d of equal length")
        if t.size < 2:
            raise ValueError("need at least two samples")
        if t[0] != 0.0:
            raise ValueError(f"samples must start at t = 0, got t = {t[0]}")

        steps = np.diff(t)
        if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=0):
            raise ValueError("sample times must form a uniform increasing grid")
        if not np.all(np.isfinite(values)):
            raise ValueError("sample values must be finite")

        object.__setattr__(self, "t", t)
        object.__setattr__(self, "values", values)

    @property
    def end(self) -> float:
        return float(self.t[-1])

    def __call__(self, x):
        return np.interp(np.asarray(x, dtype=np.float64), self.t, self.values)

    def scaled(self, factor: float) -> SampledFunction:
        return SampledFunction(self.t, factor * self.values, self.source)

    def integral(self, alpha: OrderLike) -> SampledIntegral:
        return SampledIntegral(self, as_order(alpha))


@dataclass(frozen=True, eq=False)
class SampledIntegral:
    r"""Riemann-Liouville integral of order ``alpha`` of a :class:`SampledFunction`.

    The interpolant is linear on each cell, so the integral against
    :math:`(x - s)^{\alpha - 1} / \Gamma(\alpha)` is evaluated exactly cell by
    cell.
    """

    samples: SampledFunction
    alpha: Fraction

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        if self.alpha == 0:
            return self.samples(x)
        if np.any(x > self.samples.end * (1 + 1e-12)):
            raise ValueError("evaluation point beyond the sampled interval")

        a = float(self.alpha)
        t = self.samples.t
        w = self.samples.values
        h = t[1] - t[0]
        slopes = np.diff(w) / h
        scale = 1.0 / gamma(a + 1.0)

        out = np.empty_like(x)
        for i, xi in enumerate(x):
            # only cells with left end below xi contribute
            k = min(int(np.searchsorted(t, xi, side="left")), t.size - 1)
            if k == 0:
                out[i] = 0.0
                continue
            left = t[:k]
            right = np.minimum(t[1 : k + 1], xi)
            r0 = xi - left
            r1 = xi - right
            # w(s) = w0 + slope (s - s0) with s = xi - r
            base = w[:k] * (r0**a - r1**a)
            ramp = slopes[:k] * (
                r0 * (r0**a - r1**a) - a / (a + 1.0) * (r0 ** (a + 1) - r1 ** (a + 1))
            )
            out[i] = scale * np.sum(base + ramp)

        return out
