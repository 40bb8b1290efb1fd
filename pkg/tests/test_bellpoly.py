from fractions import Fraction

import pytest
from compositae.bellpoly import (
    bell_bruteforce,
    bell_generic,
    chain_derivatives,
    enumerate_compositions,
    faa_di_bruno,
)
from compositae.errors import TriangleIndexError
from compositae.exact import bell_number, factorial, lah, stirling2
from compositae.mpoly import MPoly

y1 = MPoly.var(1)
y2 = MPoly.var(2)
y3 = MPoly.var(3)


def test_enumerate_compositions_lexicographic():
    assert list(enumerate_compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)], "Test failed"
    assert list(enumerate_compositions(3, 3)) == [(1, 1, 1)]
    assert list(enumerate_compositions(2, 3)) == []
    assert len(list(enumerate_compositions(8, 4))) == 35


def test_bell_bruteforce_small_rows():
    assert bell_bruteforce(3, 1) == y3
    assert bell_bruteforce(3, 2) == 3 * y1 * y2
    assert bell_bruteforce(3, 3) == y1**3
    assert bell_bruteforce(4, 2) == 4 * y1 * y3 + 3 * y2**2
    with pytest.raises(TriangleIndexError):
        bell_bruteforce(2, 3)


def test_bell_generic_equals_bruteforce():
    triangle = bell_generic(10)
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert triangle[n, k] == bell_bruteforce(n, k), f"B({n}, {k})"


def test_bell_generic_row_three(generic_bell):
    assert [str(p) for p in generic_bell.row(3)] == ["y3", "3*y1*y2", "y1^3"], "Test failed"
    with pytest.raises(TriangleIndexError):
        generic_bell.row(7)


def test_bell_coefficients_are_integers(generic_bell):
    for row in generic_bell.rows():
        for p in row:
            assert all(c.denominator == 1 for c in p.coefficients())


def test_bell_at_ones_is_stirling2(generic_bell):
    values = generic_bell.evaluate([1] * 6)
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert values[n - 1][k - 1] == stirling2(n, k)
        assert sum(values[n - 1]) == bell_number(n)


def test_bell_at_factorials_is_lah(generic_bell):
    values = generic_bell.evaluate([factorial(i) for i in range(1, 7)])
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert values[n - 1][k - 1] == lah(n, k)


def test_faa_di_bruno_exp_of_sin():
    # e^(sin x) at 0: g^(k) = e^0 = 1, sin derivatives cycle 1, 0, -1, 0
    out = chain_derivatives([1] * 5, [1, 0, -1, 0, 1])
    assert out[:4] == [1, 1, 0, -3], "Test failed"
    assert out[4] == -8


def test_faa_di_bruno_cube_of_sin():
    out = chain_derivatives([0, 0, 6, 0, 0], [1, 0, -1, 0, 1])
    assert out[2] == 6
    assert out[4] == -60


def test_faa_di_bruno_with_bell_row(generic_bell):
    # (g o y)'' = g'' y'^2 + g' y''
    y = [Fraction(2), Fraction(3)]
    row = [p.evaluate(y) for p in generic_bell.row(2)]
    assert faa_di_bruno(2, [5, 7], row) == 5 * 3 + 7 * 4
    with pytest.raises(ValueError):
        faa_di_bruno(3, [1, 2], row)
