from fractions import Fraction

import pytest
from hypothesis import given

from conftest import forms, rationals
from secsing.cli import PolySource, parse_poly, render
from secsing.errors import ParseError
from secsing.gpoly import divided_to_ordinary
from secsing.parse import parse_expression, parse_univariate


def test_basic_terms():
    p = parse_expression("3*x0^2*x1 - 1/2 x2^3 + x0x1x2")
    assert p.var_names == ("x0", "x1", "x2")
    assert p.terms == {(2, 1, 0): 3, (0, 0, 3): Fraction(-1, 2), (1, 1, 1): 1}


def test_like_terms_combine_and_cancel():
    p = parse_expression("x0^3 + 2*x0^3 - 3*x0^3 + x1^3")
    assert p.terms == {(0, 3): 1}
    assert len(p.written) == 4


def test_repeated_variable_adds_exponents():
    assert parse_expression("x0*x0^2").terms == {(3,): 1}


def test_nvars_padding_and_conflict():
    assert parse_expression("x0^2", nvars=3).var_names == ("x0", "x1", "x2")
    with pytest.raises(ParseError):
        parse_expression("x3^2", nvars=2)


def test_named_variables():
    p = parse_expression("a^2*b + b12", var_names=("a", "b", "b12"))
    assert p.terms == {(2, 1, 0): 1, (0, 0, 1): 1}


@pytest.mark.parametrize(
    "text, pos, fragment",
    [
        ("", 0, "empty"),
        ("x0^2 + + x1", 7, "coefficient or a variable"),
        ("x0^2 * + x1", 7, "after '*'"),
        ("x0 + 1/0*x1", 7, "zero denominator"),
        ("x0 + y1", 5, "unknown variable"),
        ("x0 ) x1", 3, "unexpected character"),
        ("x0^", 3, "integer"),
    ],
)
def test_errors_report_position(text, pos, fragment):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == pos
    assert fragment in str(info.value)


def test_unknown_named_variable():
    with pytest.raises(ParseError, match="unknown variable 'z'"):
        parse_expression("a + z", var_names=("a", "b"))


def test_univariate():
    assert parse_univariate("1 - 2t^3") == (1, 0, 0, -2)
    assert parse_univariate("0") == (0,)
    assert parse_univariate("t") == (0, 1)


def test_non_homogeneous_names_the_degrees():
    with pytest.raises(ParseError) as info:
        parse_poly("x0^3 + x1^2")
    msg = str(info.value)
    assert "degree 2: x1^2" in msg and "degree 3: x0^3" in msg


def test_cancelling_input_is_the_zero_form():
    f = parse_poly("x0^3 - x0^3")
    assert f.degree == 3 and f.is_zero()
    assert render(f) == "0*x0^3"


def test_divided_convention():
    # b_(2,1) = 6 means x0^2 x1 / 2! with coefficient 6, i.e. 3 x0^2 x1
    f = parse_poly(PolySource("6*x0^2*x1", coefficient_convention="divided-power"))
    assert divided_to_ordinary(f) == {(2, 1): 3}


@given(forms(max_nvars=4, max_degree=5, coeffs=rationals))
def test_render_parse_roundtrip(f):
    again = parse_poly(PolySource(render(f), nvars=f.nvars))
    assert again.nvars == f.nvars and again.degree == f.degree
    assert again == f
