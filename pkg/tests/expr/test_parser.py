from fractions import Fraction

import pytest

from unirat.expr import (
    NegativeExponentError,
    ParseError,
    UnknownVariableError,
    format_poly,
    parse_poly,
)

RING = ("x", "y", "z", "t")


def test_linear_form():
    p = parse_poly("4*x - z", RING)
    assert dict(p.terms) == {(1, 0, 0, 0): Fraction(4), (0, 0, 1, 0): Fraction(-1)}


def test_zero_is_empty():
    assert dict(parse_poly("0", RING).terms) == {}


def test_expansion():
    p = parse_poly("(x-y)^2 - 2*(x+y)*t + t^2", RING)
    q = parse_poly("x^2 - 2*x*y + y^2 - 2*x*t - 2*y*t + t^2", RING)
    assert p == q


def test_rationals_and_whitespace():
    p = parse_poly("  3/6 * x ^ 2  - 0 + 1/3 ", RING)
    assert p == parse_poly("1/2*x^2 + 1/3", RING)


def test_leading_minus_inside_parentheses():
    assert parse_poly("(-x + y)*2", RING) == parse_poly("2*y - 2*x", RING)


@pytest.mark.parametrize(
    "text, position",
    [
        ("2x", 1),
        ("x +", 3),
        ("x ** 2", 3),
        ("(x + y", 6),
        ("x / 2", 2),
        ("x - -y", 4),
        ("1/0", 2),
        ("x # y", 2),
    ],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as excinfo:
        parse_poly(text, RING)
    assert excinfo.value.position == position


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as excinfo:
        parse_poly("x + w", RING)
    assert excinfo.value.position == 4


def test_negative_exponent():
    with pytest.raises(NegativeExponentError) as excinfo:
        parse_poly("x^-1", RING)
    assert excinfo.value.position == 2


def test_print_then_parse_is_identity():
    for text in ["4*x - z", "-1/2*x*y^3 + 7/3*t - 11", "0", "(x+y+z+t)^4"]:
        p = parse_poly(text, RING)
        assert parse_poly(format_poly(p), RING) == p
