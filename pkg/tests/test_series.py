from fractions import Fraction

import pytest
from compositae.errors import NotDeltaSeriesError
from compositae.mpoly import MPoly
from compositae.ring import FLOAT, POLYNOMIAL, RATIONAL
from compositae.series import Series


def geometric_series(order):
    # 1/(1-z)
    return Series([Fraction(1)] * (order + 1))


def test_series_ring_is_inferred():
    assert Series([0, 1, Fraction(1, 2)]).ring is RATIONAL
    assert Series([0, 1.0]).ring is FLOAT
    assert Series([MPoly.zero(), MPoly.var(1)]).ring is POLYNOMIAL
    with pytest.raises(TypeError):
        Series([0.5, MPoly.var(1)])


def test_series_arithmetic():
    z = Series.identity(4, RATIONAL)
    one_minus_z = Series.constant(1, 4) - z
    assert (geometric_series(4) * one_minus_z) == Series([1, 0, 0, 0, 0])
    assert (z + z) == z.scale(2)
    assert (z**3).coeffs == (0, 0, 0, 1, 0)


def test_series_orders_truncate_to_smaller():
    a = Series([0, 1, 1, 1])
    b = Series([0, 1])
    assert (a + b).order == 1


def test_series_compose():
    z = Series.identity(5, RATIONAL)
    # 1/(1-z) composed with z + z^2 is the Fibonacci generating function
    fib = geometric_series(5).compose(z + z**2)
    assert list(fib.coeffs) == [1, 1, 2, 3, 5, 8], "Test failed"


def test_series_compose_needs_delta_inner():
    with pytest.raises(NotDeltaSeriesError):
        geometric_series(3).compose(geometric_series(3))


def test_series_derivatives_round_trip():
    s = Series.from_derivatives([1, 2, 6, 24])
    assert list(s.coeffs) == [0, 1, 1, 1, 1]
    assert s.derivative_values() == [1, 2, 6, 24]
    assert s.is_delta()
    assert not geometric_series(2).is_delta()


def test_series_float_equality_uses_tolerance():
    a = Series([0.0, 1.0, 0.5])
    b = Series([0.0, 1.0 + 1e-12, 0.5])
    assert a == b
    assert a != Series([0.0, 1.0, 0.6])
