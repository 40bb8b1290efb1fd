from fractions import Fraction

import pytest
from compositae.errors import UnboundIndeterminateError
from compositae.mpoly import MPoly

y1 = MPoly.var(1)
y2 = MPoly.var(2)
y3 = MPoly.var(3)


def test_mpoly_canonical_form():
    p = MPoly({(1, 0, 0): 2, (1,): 1, (0, 1): 0})
    assert p == 3 * y1
    assert p.terms == {(1,): Fraction(3)}, "Test failed"
    assert MPoly({(2,): 0}).is_zero()


def test_mpoly_arithmetic():
    p = (y1 + y2) ** 2
    assert p == y1**2 + 2 * y1 * y2 + y2**2
    assert p - p == 0
    assert (y1 * 3) / 3 == y1
    assert 1 - y1 == -(y1 - 1)
    assert p.total_degree() == 2
    assert p.indeterminates() == [1, 2]


def test_mpoly_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        y1 / 0
    with pytest.raises(ZeroDivisionError):
        y1 / y2


def test_mpoly_printing():
    assert str(3 * y1 * y2) == "3*y1*y2"
    assert str(y1**3) == "y1^3"
    assert str(y3 + 3 * y1 * y2 + y1**3) == "y1^3 + 3*y1*y2 + y3"
    assert str(y1 - Fraction(1, 2)) == "y1 - 1/2"
    assert str(MPoly.zero()) == "0"


def test_mpoly_substitute():
    p = y1**2 * y2
    q = p.substitute({1: y2, 2: 3})
    assert q == 3 * y2**2
    assert p.substitute({2: y1}) == y1**3
    # simultaneous: y1 -> y2, y2 -> y1
    assert (y1 + 2 * y2).substitute({1: y2, 2: y1}) == y2 + 2 * y1


def test_mpoly_evaluate():
    p = y3 + 3 * y1 * y2 + y1**3
    assert p.evaluate([1, 2, 3]) == 1 + 6 + 3
    assert p.evaluate({1: Fraction(1, 2), 2: 0, 3: 0}) == Fraction(1, 8)
    assert p.evaluate([0.5, 0, 0]) == 0.125


def test_mpoly_evaluate_unbound():
    with pytest.raises(UnboundIndeterminateError) as e:
        (y1 * y3).evaluate([1, 2])
    assert e.value.index == 3
    assert isinstance(e.value, KeyError)


def test_mpoly_hash_matches_equality():
    assert hash(y1 + y2) == hash(y2 + y1)
    assert len({y1 * y2, y2 * y1, y1}) == 2
