from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import EXAMPLE_1_TEXT, EXAMPLE_2_TEXT, example_1, example_2
from rlfde import PowerSum
from rlfde.analysis import EquationSpec
from rlfde.dsl import EquationSyntaxError, format_equation, parse_equation
from rlfde.io import write_sampled_rhs
from rlfde.sampled import SampledFunction

F = Fraction


def test_example_1():
    spec = parse_equation("D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = 1*t^{3}")
    assert spec.orders == example_1().orders
    assert spec.coefficients == example_1().coefficients
    assert spec.rhs == example_1().rhs
    assert parse_equation(EXAMPLE_1_TEXT).rhs == PowerSum.monomial(1.0, 3)


def test_example_2():
    spec = parse_equation(EXAMPLE_2_TEXT)
    assert spec.orders == example_2().orders
    assert spec.coefficients == example_2().coefficients


def test_single_order_zero_rhs():
    spec = parse_equation("D^{1/2} u = 0")
    assert spec.orders == (F(1, 2),)
    assert not spec.rhs


def test_duplicates_are_merged_then_normalized():
    spec = parse_equation("D^{1/2} u + D^{1/2} u = 1")
    assert spec.orders == (F(1, 2),)
    assert spec.coefficients == (1.0,)
    assert spec.rhs == PowerSum.constant(0.5)
    raw = parse_equation("D^{1/2} u + D^{1/2} u = 1", normalized=False)
    assert raw.coefficients == (2.0,)


@pytest.mark.parametrize(
    "text, orders, coefficients, rhs",
    [
        ("D^{1/2} u + u = 0", ("0", "1/2"), (1.0, 1.0), []),
        ("D^1/2 u - 0.5 D^{1/4}u = -2 t^{1/2} + 3", ("1/4", "1/2"), (-0.5, 1.0), [(3.0, "0"), (-2.0, "1/2")]),
        ("-D^{3/2} u + I^0 u = t", ("0", "3/2"), (-1.0, 1.0), [(-1.0, "1")]),
        ("2/3*D^{2} u = 1/2*t^2", ("2",), (1.0,), [(0.75, "2")]),
        ("D^{-0} u = t^{-1/2}", ("0",), (1.0,), [(1.0, "-1/2")]),
        ("D^{1/2} u\n + 1e-1 u = 2.5e1", ("0", "1/2"), (0.1, 1.0), [(25.0, "0")]),
    ],
)
def test_parse_forms(text, orders, coefficients, rhs):
    spec = parse_equation(text)
    assert spec.orders == tuple(F(q) for q in orders)
    np.testing.assert_allclose(spec.coefficients, coefficients, rtol=1e-15)
    assert spec.rhs.exponents == tuple(F(e) for _, e in rhs)
    np.testing.assert_allclose(spec.rhs.coefficients, [c for c, _ in rhs], rtol=1e-15)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("D^{1/2} v = 0", 1, 9),
        ("D^{1/2} u = ", 1, 13),
        ("D^{1/2} u = 0 0", 1, 15),
        ("D^{1/2} u $ 1", 1, 11),
        ("D^{1/2} u\n+ I^{1/2} u = 0", 2, 3),
        ("D^{-1/2} u = 0", 1, 3),
        ("D^{1/0} u = 0", 1, 6),
        ("D^{1/2} u = t^{-1}", 1, 15),
        ("D^{1/2} u - D^{1/2} u + u = 0", 1, 1),
        ("D^{1/2 u = 0", 1, 8),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(EquationSyntaxError) as info:
        parse_equation(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_file_rhs(tmp_path):
    t = np.linspace(0, 1, 11)
    write_sampled_rhs(SampledFunction(t, 2 * t), tmp_path / "w.csv")
    spec = parse_equation("2 D^{1/2} u = @file:w.csv", base_dir=tmp_path)
    assert isinstance(spec.rhs, SampledFunction)
    np.testing.assert_allclose(spec.rhs.values, t)
    assert format_equation(spec).endswith(f"@file:{tmp_path / 'w.csv'}")


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        parse_equation("D^{1/2} u = @file:nope.csv", base_dir=tmp_path)


def test_format_examples():
    assert format_equation(example_1()) == "D^{7/3} u + 3.0*D^{4/3} u + 4.0*D^{1/3} u = t^{3}"
    spec = EquationSpec((F(0), F(1, 2)), (-0.25, 1.0), PowerSum.from_coefficients([1.0, -2.0], [0, 1]))
    assert format_equation(spec) == "D^{1/2} u - 0.25*u = -2.0*t + 1.0"


orders = st.fractions(min_value=0, max_value=5, max_denominator=12)
coefficients = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda c: c != 0)


@st.composite
def specs(draw):
    qs = sorted(draw(st.sets(orders, min_size=1, max_size=6)))
    if qs[-1] == 0:
        qs.append(F(1, 2))
    cs = draw(st.lists(coefficients, min_size=len(qs), max_size=len(qs)))
    terms = draw(
        st.lists(
            st.tuples(coefficients, st.fractions(min_value=F(-11, 12), max_value=6, max_denominator=12)),
            max_size=4,
        )
    )
    return EquationSpec(tuple(qs), tuple(cs), PowerSum(tuple(terms)))


@given(specs())
def test_print_parse_fixed_point(spec):
    again = parse_equation(format_equation(spec), normalized=False)
    assert again.orders == spec.orders
    np.testing.assert_allclose(again.coefficients, spec.coefficients, rtol=1e-15)
    assert again.rhs.exponents == spec.rhs.exponents
    np.testing.assert_allclose(again.rhs.coefficients, spec.rhs.coefficients, rtol=1e-15)
    assert format_equation(again) == format_equation(spec)
