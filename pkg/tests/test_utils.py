import math
from fractions import Fraction

import pytest
from compositae.mpoly import MPoly
from compositae.utils import format_param, format_value, parse_param, parse_point


def test_parse_point_exact_and_float():
    assert parse_point("3") == 3
    assert parse_point(" -3/2 ") == Fraction(-3, 2)
    assert isinstance(parse_point("0.7"), float)
    assert parse_point("1e-3") == 0.001
    assert parse_point("pi/3") == pytest.approx(math.pi / 3)
    assert parse_point("2*pi") == pytest.approx(2 * math.pi)
    assert parse_point("e") == math.e


def test_parse_point_rejects_garbage():
    for text in ["", "x", "1/0", "pi/"]:
        with pytest.raises(ValueError):
            parse_point(text)


def test_parse_param_is_exact():
    assert parse_param("0.25") == Fraction(1, 4)
    assert parse_param("-3") == -3
    with pytest.raises(ValueError):
        parse_param("1/2")


def test_format_param():
    assert format_param(Fraction(1, 8)) == "0.125"
    assert format_param(Fraction(-1, 4)) == "-0.25"
    assert format_param(Fraction(5)) == "5"
    with pytest.raises(ValueError):
        format_param(Fraction(1, 3))


def test_format_value():
    assert format_value(Fraction(-1, 6)) == "-1/6"
    assert format_value(7) == "7"
    assert format_value(0.1 + 0.2) == "0.3"
    assert format_value(-0.0) == "0"
    assert format_value(-1e-300 * 1e-300) == "0"
    assert format_value(3 * MPoly.var(1) * MPoly.var(2)) == "3*y1*y2"
    with pytest.raises(TypeError):
        format_value(True)
