"""Initial values versus source terms of the integral form.

A strong solution of the differential equation is fixed by ``m`` initial values
``a_k`` of orders ``beta_n - m, ..., beta_n - 1`` (lowest first). The same
solution solves the integral equation with source
``f = sum_k b_k t^(beta_n - m + k - 1)``. The two vectors are related by a
lower triangular system with unit diagonal whose off-diagonal entries are the
coefficients of the orders ``beta_n - j`` for integer ``j < m``::

    a_k + e_1 a_{k-1} + ... + e_{k-1} a_1 = Gamma(beta_n - m + k) b_k
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from rlfde.analysis import AnalysisReport, EquationSpec, analyze, normalize
from rlfde.orders import gamma


def integer_gap_coefficients(spec: EquationSpec, m: int) -> list[float]:
    """Coefficients ``e_j`` of ``D^(beta_n - j)`` for ``j = 1, ..., m - 1``.

    Orders that do not appear contribute a zero.
    """
    spec = normalize(spec)
    top = spec.top_order
    return [spec.coefficient_of(top - j) for j in range(1, m)]


def _system(spec: EquationSpec, report: AnalysisReport):
    m = report.m
    e = integer_gap_coefficients(spec, m)
    scale = np.array([gamma(float(q) + 1.0) for q in report.ic_orders])
    return e, scale


def _check_length(values: Sequence[float], report: AnalysisReport, name: str):
    values = np.asarray(values, dtype=np.float64)
    if values.shape != (report.m,):
        raise ValueError(
            f"expected {report.m} {name} for this equation, got {values.size}"
        )
    return values


def ic_to_source(
    a: Sequence[float], spec: EquationSpec, report: AnalysisReport | None = None
) -> np.ndarray:
    """Source coefficients ``b`` producing the initial values ``a``."""
    report = analyze(spec) if report is None else report
    a = _check_length(a, report, "initial values")
    e, scale = _system(spec, report)

    lhs = a.copy()
    for k in range(report.m):
        for j in range(1, k + 1):
            lhs[k] += e[j - 1] * a[k - j]
    return lhs / scale


def source_to_ic(
    b: Sequence[float], spec: EquationSpec, report: AnalysisReport | None = None
) -> np.ndarray:
    """Initial values ``a`` of the solution driven by source coefficients ``b``.

    Forward substitution on the unit lower triangular system.
    """
    report = analyze(spec) if report is None else report
    b = _check_length(b, report, "source coefficients")
    e, scale = _system(spec, report)

    rhs = scale * b
    a = np.empty_like(rhs)
    for k in range(report.m):
        acc = rhs[k]
        for j in range(1, k + 1):
            acc -= e[j - 1] * a[k - j]
        a[k] = acc
    return a
