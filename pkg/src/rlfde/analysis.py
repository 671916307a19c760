r"""Structure of the solution space of a linear RL equation.

For an equation

.. math::

    c_1 D^{\beta_1} u + \cdots + c_{n-1} D^{\beta_{n-1}} u + D^{\beta_n} u = w

solutions have to be differentiable to every order that appears. Functions
with that property are a finite-dimensional span of powers
:math:`t^{\beta_n - k}` plus :math:`I^{\beta_n} L^1`, and the number of
admissible powers is :math:`m = \lceil \beta_n - \beta_* \rceil`, where
:math:`\beta_*` is the largest order whose gap to :math:`\beta_n` is not an
integer (zero if there is none). That same ``m`` counts the initial values
needed for a unique solution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from rlfde.orders import OrderLike, PowerSum, as_order, format_order, is_integer
from rlfde.sampled import SampledFunction

Rhs = Union[PowerSum, SampledFunction]


class ICKind(str, enum.Enum):
    """How an initial value is imposed at ``t = 0``."""

    DERIVATIVE = "derivative"
    """``D^q u(0)`` for an order ``q >= 0``."""
    INTEGRAL = "integral"
    """``I^{-q} u(0)`` for a negative order ``q``."""


@dataclass(frozen=True)
class EquationSpec:
    """Orders, coefficients and right-hand side of a linear RL equation.

    *orders* are strictly increasing and non-negative; ``coefficients[j]``
    multiplies ``D^{orders[j]}``. Zero coefficients are allowed below the top
    order and are ignored by the analysis.
    """

    orders: tuple[Fraction, ...]
    coefficients: tuple[float, ...]
    rhs: Rhs = PowerSum()

    def __post_init__(self) -> None:
        orders = tuple(as_order(q) for q in self.orders)
        coefficients = tuple(float(c) for c in self.coefficients)

        if not orders:
            raise ValueError("an equation needs at least one order")
        if len(orders) != len(coefficients):
            raise ValueError("orders and coefficients differ in length")
        if orders[0] < 0:
            raise ValueError(f"orders must be >= 0, got {format_order(orders[0])}")
        if any(a >= b for a, b in zip(orders, orders[1:])):
            raise ValueError("orders must be strictly increasing")
        if not all(math.isfinite(c) for c in coefficients):
            raise ValueError("coefficients must be finite")

        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def top_order(self) -> Fraction:
        return self.orders[-1]

    @property
    def leading_coefficient(self) -> float:
        return self.coefficients[-1]

    @property
    def is_normalized(self) -> bool:
        return self.coefficients[-1] == 1.0

    def coefficient_of(self, order: OrderLike) -> float:
        """Coefficient of ``D^order``, zero if the order does not appear."""
        order = as_order(order)
        for q, c in zip(self.orders, self.coefficients):
            if q == order:
                return c
        return 0.0

    def active_orders(self) -> tuple[Fraction, ...]:
        """Orders with a nonzero coefficient (the top order always counts)."""
        return tuple(
            q
            for j, (q, c) in enumerate(zip(self.orders, self.coefficients))
            if c != 0.0 or j == len(self.orders) - 1
        )


def normalize(spec: EquationSpec) -> EquationSpec:
    """Divide the equation by its leading coefficient."""
    lead = spec.leading_coefficient
    if lead == 0.0:
        raise ValueError("the coefficient of the highest order is zero")
    if lead == 1.0:
        return spec

    coefficients = tuple(c / lead for c in spec.coefficients[:-1]) + (1.0,)
    if isinstance(spec.rhs, PowerSum):
        rhs = spec.rhs * (1.0 / lead)
    else:
        rhs = spec.rhs.scaled(1.0 / lead)
    return EquationSpec(spec.orders, coefficients, rhs)


def compute_beta_star(orders: Sequence[OrderLike]) -> Fraction:
    """Largest lower order whose gap to the highest one is not an integer.

    Returns ``0`` when every gap is an integer, including the single-order case.
    """
    orders = [as_order(q) for q in orders]
    if not orders:
        raise ValueError("need at least one order")
    if any(a >= b for a, b in zip(orders, orders[1:])):
        raise ValueError("orders must be strictly increasing")

    top = orders[-1]
    candidates = [q for q in orders[:-1] if not is_integer(top - q)]
    return max(candidates, default=Fraction(0))


@dataclass(frozen=True)
class AnalysisReport:
    beta_star: Fraction
    m: int
    """Number of initial values, ``ceil(beta_n - beta_star)``."""
    kernel_basis_exponents: tuple[Fraction, ...]
    """Exponents spanning ``ker D^{beta_n}``, from ``beta_n - 1`` downwards."""
    strong_basis_exponents: tuple[Fraction, ...]
    """The leading ``m`` kernel exponents: sources giving strong solutions."""
    ic_orders: tuple[Fraction, ...]
    """Orders of the initial values, ``beta_n - m, ..., beta_n - 1``."""
    ic_kinds: tuple[ICKind, ...]
    top_order: Fraction

    @property
    def codimension(self) -> int:
        return self.m

    @property
    def weak_dimension(self) -> int:
        return len(self.kernel_basis_exponents)

    def describe_initial_values(self) -> list[str]:
        """Human readable initial values, e.g. ``['I^{2/3}u(0)', 'D^{1/3}u(0)']``."""
        out = []
        for q, kind in zip(self.ic_orders, self.ic_kinds):
            if kind is ICKind.INTEGRAL:
                out.append(f"I^{{{format_order(-q)}}}u(0)")
            else:
                out.append(f"D^{{{format_order(q)}}}u(0)")
        return out


def analyze(spec: EquationSpec) -> AnalysisReport:
    """Compute ``beta_*``, the number of initial values and the relevant bases."""
    if spec.leading_coefficient == 0.0:
        raise ValueError("the coefficient of the highest order is zero")
    top = spec.top_order
    if top <= 0:
        raise ValueError("the highest order must be positive")

    beta_star = compute_beta_star(spec.active_orders())
    m = math.ceil(top - beta_star)

    kernel = tuple(top - k for k in range(1, math.ceil(top) + 1))
    strong = kernel[:m]
    ic_orders = tuple(top - m + k for k in range(m))
    kinds = tuple(ICKind.INTEGRAL if q < 0 else ICKind.DERIVATIVE for q in ic_orders)

    return AnalysisReport(
        beta_star=beta_star,
        m=m,
        kernel_basis_exponents=kernel,
        strong_basis_exponents=strong,
        ic_orders=ic_orders,
        ic_kinds=kinds,
        top_order=top,
    )


def check_strong_membership(singular_part: PowerSum, report: AnalysisReport) -> bool:
    """Whether a kernel element only uses the strong basis powers.

    Raises :class:`ValueError` if *singular_part* has a power outside the
    kernel of ``D^{beta_n}``.
    """
    kernel = set(report.kernel_basis_exponents)
    strong = set(report.strong_basis_exponents)

    inside = True
    for _, exponent in singular_part:
        if exponent not in kernel:
            raise ValueError(
                f"t^{{{format_order(exponent)}}} is not in the kernel of "
                f"D^{format_order(report.top_order)}"
            )
        inside = inside and exponent in strong
    return inside
