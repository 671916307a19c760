r"""Exact orders, the Gamma function and the power-sum algebra.

Orders of differentiation and integration are kept as :class:`fractions.Fraction`
so that questions such as "is this gap an integer?" are answered exactly.
Coefficients are ordinary floats.

A :class:`PowerSum` is a finite combination :math:`\sum_i c_i t^{\gamma_i}`
with rational exponents :math:`\gamma_i > -1`. Riemann-Liouville integrals map
this family into itself in closed form,

.. math::

    I^\alpha t^\gamma = \frac{\Gamma(\gamma + 1)}{\Gamma(\alpha + \gamma + 1)}
        t^{\alpha + \gamma},

which is what makes exact manipulation of singular source terms possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

Order = Fraction
"""Exact rational order. Always a :class:`fractions.Fraction`."""

OrderLike = Union[Fraction, int, str, float]

KernelTerm = Tuple[float, Fraction]
"""A ``(coefficient, gap)`` pair standing for ``coefficient * I^gap``."""


class GammaPoleError(ValueError):
    """Raised when the Gamma function is evaluated at a pole."""


def as_order(value: OrderLike) -> Fraction:
    """Convert *value* to an exact :class:`~fractions.Fraction`.

    Strings such as ``"7/3"``, ``"-2/3"`` or ``"2"`` are parsed exactly. Floats
    are converted through their shortest decimal representation, so ``0.25``
    becomes ``1/4`` (and not the binary expansion of 0.25).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not orders")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"order must be finite: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1].strip()
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an order")


def format_order(value: Fraction) -> str:
    """Canonical text form of an order: ``"7/3"``, ``"-2/3"``, ``"2"``."""
    return str(Fraction(value))


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def gamma(x: float) -> float:
    """Real Gamma function.

    Raises :class:`GammaPoleError` at zero and the negative integers.
    """
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        raise GammaPoleError(f"Gamma has a pole at {x!r}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """Reciprocal Gamma function, extended by zero at the poles."""
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def gamma_ratio(a: float, b: float) -> float:
    r""":math:`\Gamma(a) / \Gamma(b)`, stable for large arguments."""
    if a < 170.0 and b < 170.0:
        return gamma(a) / gamma(b)

    sa = math.copysign(1.0, gamma(a)) if a < 170.0 else 1.0
    sb = math.copysign(1.0, gamma(b)) if b < 170.0 else 1.0
    return sa * sb * math.exp(math.lgamma(a) - math.lgamma(b))


def _normalize_terms(
    terms: Iterable[tuple[float, OrderLike]],
) -> tuple[tuple[float, Fraction], ...]:
    merged: dict[Fraction, float] = {}
    for coefficient, exponent in terms:
        exponent = as_order(exponent)
        coefficient = float(coefficient)
        if not math.isfinite(coefficient):
            raise ValueError(f"coefficient of t^{exponent} is not finite")
        if exponent <= -1:
            raise ValueError(
                f"exponent {format_order(exponent)} is not integrable at 0 "
                "(exponents must be > -1)"
            )
        merged[exponent] = merged.get(exponent, 0.0) + coefficient

    return tuple(
        (merged[exponent], exponent)
        for exponent in sorted(merged)
        if merged[exponent] != 0.0
    )


@dataclass(frozen=True)
class PowerSum:
    r"""A finite sum :math:`\sum_i c_i t^{\gamma_i}` with rational
    :math:`\gamma_i > -1`.

    Terms are stored sorted by exponent, with like exponents merged exactly and
    zero coefficients dropped, so the empty sum is the zero function.
    """

    terms: tuple[tuple[float, Fraction], ...] = field(default=())
    """``(coefficient, exponent)`` pairs sorted by increasing exponent."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _normalize_terms(self.terms))

    @classmethod
    def monomial(cls, coefficient: float, exponent: OrderLike) -> PowerSum:
        return cls(((coefficient, as_order(exponent)),))

    @classmethod
    def constant(cls, value: float) -> PowerSum:
        return cls.monomial(value, 0)

    @classmethod
    def from_coefficients(
        cls, coefficients: Sequence[float], exponents: Sequence[OrderLike]
    ) -> PowerSum:
        if len(coefficients) != len(exponents):
            raise ValueError("coefficients and exponents differ in length")
        return cls(tuple(zip(coefficients, exponents)))

    @property
    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(e for _, e in self.terms)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return tuple(c for c, _ in self.terms)

    @property
    def min_exponent(self) -> Fraction | None:
        """Smallest exponent, or *None* for the zero function."""
        return self.terms[0][1] if self.terms else None

    def coefficient(self, exponent: OrderLike) -> float:
        exponent = as_order(exponent)
        for c, e in self.terms:
            if e == exponent:
                return c
        return 0.0

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: PowerSum) -> PowerSum:
        if not isinstance(other, PowerSum):
            return NotImplemented
        return PowerSum(self.terms + other.terms)

    def __neg__(self) -> PowerSum:
        return PowerSum(tuple((-c, e) for c, e in self.terms))

    def __sub__(self, other: PowerSum) -> PowerSum:
        if not isinstance(other, PowerSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: float) -> PowerSum:
        if isinstance(scalar, PowerSum):
            return NotImplemented
        scalar = float(scalar)
        return PowerSum(tuple((scalar * c, e) for c, e in self.terms))

    __rmul__ = __mul__

    def split(self, threshold: OrderLike = 0) -> tuple[PowerSum, PowerSum]:
        """Split into the terms with exponent ``< threshold`` and the rest."""
        threshold = as_order(threshold)
        below = tuple(t for t in self.terms if t[1] < threshold)
        rest = tuple(t for t in self.terms if t[1] >= threshold)
        return PowerSum(below), PowerSum(rest)

    def __call__(self, t):
        """Evaluate at the points *t* (scalar or array).

        At ``t = 0`` a term ``t^0`` contributes its coefficient, positive
        powers vanish and negative powers give ``inf``.
        """
        t = np.asarray(t, dtype=np.float64)
        result = np.zeros_like(t)
        with np.errstate(divide="ignore"):
            for c, e in self.terms:
                result = result + c * np.power(t, float(e))
        return result

    def value_at_zero(self) -> float:
        """Limit of the function as ``t -> 0+``."""
        value = 0.0
        for c, e in self.terms:
            if e < 0:
                return math.copysign(math.inf, c)
            if e == 0:
                value += c
        return value

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = " + ".join(f"{c!r}*t^{{{format_order(e)}}}" for c, e in self.terms)
        return text.replace("+ -", "- ")


def rl_integral_power(alpha: OrderLike, p: PowerSum) -> PowerSum:
    """Riemann-Liouville integral of order *alpha* applied to a power sum.

    Each term ``c t^g`` becomes ``c Gamma(g+1)/Gamma(alpha+g+1) t^(g+alpha)``.
    ``alpha = 0`` is the identity.
    """
    alpha = as_order(alpha)
    if alpha < 0:
        raise ValueError(f"integration order must be >= 0, got {alpha}")
    if alpha == 0:
        return p

    a = float(alpha)
    return PowerSum(
        tuple(
            (c * gamma_ratio(float(e) + 1.0, a + float(e) + 1.0), e + alpha)
            for c, e in p.terms
        )
    )


def in_derivative_domain(exponent: OrderLike, alpha: OrderLike) -> bool:
    """Whether ``t^exponent`` has a summable RL derivative of order *alpha*.

    True when ``exponent - alpha > -1`` or when ``exponent - alpha`` is a
    negative integer (then the derivative vanishes).
    """
    shift = as_order(exponent) - as_order(alpha)
    return shift > -1 or (is_integer(shift) and shift < 0)


def rl_derivative_power(alpha: OrderLike, p: PowerSum) -> PowerSum:
    """Riemann-Liouville derivative of order *alpha* of a power sum.

    Negative *alpha* means integration of order ``-alpha``. Terms whose
    shifted exponent is a negative integer are annihilated. Raises
    :class:`ValueError` if some term has no summable derivative of this order.
    """
    alpha = as_order(alpha)
    if alpha <= 0:
        return rl_integral_power(-alpha, p)

    terms = []
    for c, e in p.terms:
        shift = e - alpha
        if is_integer(shift) and shift < 0:
            continue
        if shift <= -1:
            raise ValueError(
                f"t^{{{format_order(e)}}} has no summable derivative of order "
                f"{format_order(alpha)}"
            )
        terms.append((c * gamma_ratio(float(e) + 1.0, float(shift) + 1.0), shift))

    return PowerSum(tuple(terms))


def is_in_image(exponent: OrderLike, gamma_order: OrderLike) -> bool:
    """Whether ``t^exponent`` lies in the image of ``I^gamma_order`` on L^1."""
    exponent = as_order(exponent)
    gamma_order = as_order(gamma_order)
    if exponent <= -1:
        raise ValueError("exponent must be > -1")
    if gamma_order < 0:
        raise ValueError("integration order must be >= 0")
    return exponent > gamma_order - 1


def apply_upsilon(kernel_terms: Iterable[KernelTerm], p: PowerSum) -> PowerSum:
    """Apply ``sum_j c_j I^{gap_j}`` to *p*, merging like exponents."""
    result = PowerSum()
    for coefficient, gap in kernel_terms:
        gap = as_order(gap)
        if gap <= 0:
            raise ValueError(f"kernel gaps must be positive, got {gap}")
        result = result + float(coefficient) * rl_integral_power(gap, p)
    return result
