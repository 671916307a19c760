from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from helpers import quad_rl_integral_power
from rlfde import PowerSum, SampledFunction
from rlfde.orders import rl_integral_power


def test_validation():
    with pytest.raises(ValueError):
        SampledFunction(np.array([0.1, 0.2, 0.3]), np.zeros(3))
    with pytest.raises(ValueError):
        SampledFunction(np.array([0.0, 0.1, 0.3]), np.zeros(3))
    with pytest.raises(ValueError):
        SampledFunction(np.array([0.0]), np.zeros(1))
    with pytest.raises(ValueError):
        SampledFunction(np.array([0.0, 1.0]), np.array([0.0, np.inf]))


@pytest.mark.parametrize("alpha", ["1/2", "4/3", "7/3", "3"])
def test_integral_is_exact_for_linear_data(alpha):
    t = np.linspace(0, 2, 41)
    samples = SampledFunction(t, 2.0 - 3.0 * t)
    exact = rl_integral_power(alpha, PowerSum.from_coefficients([2.0, -3.0], [0, 1]))
    x = np.array([0.0, 0.05, 0.33, 1.0, 1.999, 2.0])
    np.testing.assert_allclose(samples.integral(alpha)(x), exact(x), rtol=1e-12, atol=1e-15)


def test_integral_of_smooth_data_converges_second_order():
    errors = []
    for n in (32, 64, 128):
        t = np.linspace(0, 1, n + 1)
        integral = SampledFunction(t, t**2).integral(Fraction(1, 2))
        x = np.array([0.3, 0.7, 1.0])
        exact = [quad_rl_integral_power(0.5, 2.0, xi) for xi in x]
        errors.append(np.max(np.abs(integral(x) - exact)))
    assert errors[0] / errors[1] > 3.5
    assert errors[1] / errors[2] > 3.5


def test_integral_refuses_extrapolation():
    t = np.linspace(0, 1, 11)
    with pytest.raises(ValueError):
        SampledFunction(t, t).integral(Fraction(1, 2))(np.array([1.5]))


def test_order_zero_is_interpolation():
    t = np.linspace(0, 1, 11)
    samples = SampledFunction(t, t**2)
    x = np.array([0.05, 0.5])
    np.testing.assert_allclose(samples.integral(0)(x), np.interp(x, t, t**2))
