import math
import random
from fractions import Fraction

import pytest
from compositae import bell_generic
from compositae.ring import FloatRing


@pytest.fixture
def rng():
    return random.Random(7)


@pytest.fixture(scope="session")
def generic_bell():
    return bell_generic(6)


@pytest.fixture
def rows_close():
    """Compare two lists of rows entrywise, exactly when both sides are rational."""
    ring = FloatRing(1e-9)

    def func(expected, computed):
        assert len(expected) == len(computed), "Test failed"
        for want_row, got_row in zip(expected, computed):
            assert len(want_row) == len(got_row), "Test failed"
            for want, got in zip(want_row, got_row):
                if isinstance(want, (int, Fraction)) and isinstance(got, (int, Fraction)):
                    assert want == got, f"{want} != {got}"
                else:
                    assert ring.equal(want, got), f"{want} != {got}"
        return True

    return func


@pytest.fixture
def sin_points():
    return [Fraction(0), 0.7, math.pi / 3]
