"""Coefficient rings for series and compositae.

Series and compositae hold plain Python values (Fraction, float or MPoly) and
do arithmetic with the ordinary operators. A ring descriptor supplies what the
operators cannot: the zero and one of the ring, how two elements compare, and
which elements are units."""

import math
from fractions import Fraction

from beartype.typing import Iterable, Literal, Union

from compositae import constants
from compositae.errors import NonInvertibleError
from compositae.mpoly import MPoly

Scalar = Union[int, Fraction, float]
Coefficient = Union[int, Fraction, float, MPoly]
RingName = Literal["rational", "float", "polynomial"]


class Ring:
    name: RingName = None
    exact = True

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        return value

    def is_zero(self, a) -> bool:
        return a == 0

    def equal(self, a, b) -> bool:
        return a == b

    def inverse(self, a):
        if self.is_zero(a):
            raise NonInvertibleError(f"{a} is not invertible in the {self.name} ring")
        return self.one / a

    def __repr__(self):
        return f"<{self.name} ring>"


class RationalRing(Ring):
    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        return Fraction(value)


class FloatRing(Ring):
    """Doubles compared up to a relative tolerance.

    Two values are equal when |a - b| <= rel_tol * max(1, |a|, |b|), so the
    tolerance turns absolute for values below one."""

    name = "float"
    exact = False

    def __init__(self, rel_tol: float = constants.FLOAT_REL_TOL):
        self.rel_tol = rel_tol

    @property
    def zero(self):
        return 0.0

    @property
    def one(self):
        return 1.0

    def coerce(self, value):
        return float(value)

    def is_zero(self, a) -> bool:
        return abs(a) <= self.rel_tol

    def equal(self, a, b) -> bool:
        a = float(a)
        b = float(b)
        if math.isnan(a) or math.isnan(b):
            return False
        return abs(a - b) <= self.rel_tol * max(1.0, abs(a), abs(b))

    def with_tolerance(self, rel_tol: float) -> "FloatRing":
        return FloatRing(rel_tol)


class PolynomialRing(Ring):
    name = "polynomial"

    @property
    def zero(self):
        return MPoly.zero()

    @property
    def one(self):
        return MPoly.one()

    def coerce(self, value):
        return value if isinstance(value, MPoly) else MPoly.constant(value)

    def is_zero(self, a) -> bool:
        return a == 0

    def inverse(self, a):
        if not isinstance(a, MPoly):
            return RATIONAL.inverse(a)
        if a.is_zero() or not a.is_constant():
            raise NonInvertibleError(f"{a} is not a unit of the polynomial ring")
        return MPoly.constant(1 / a.constant_term())


RATIONAL = RationalRing()
FLOAT = FloatRing()
POLYNOMIAL = PolynomialRing()

_RANK = {"rational": 0, "polynomial": 1, "float": 2}


def ring_of_value(value) -> Ring:
    if isinstance(value, MPoly):
        return POLYNOMIAL
    if isinstance(value, float):
        return FLOAT
    if isinstance(value, (int, Fraction)):
        return RATIONAL
    raise TypeError(f"no coefficient ring for {type(value).__name__}")


def join(*rings: Ring) -> Ring:
    """The narrowest ring holding elements of every given ring."""
    best = RATIONAL
    for r in rings:
        if _RANK[r.name] > _RANK[best.name]:
            best = r
    names = {r.name for r in rings}
    if "float" in names and "polynomial" in names:
        raise TypeError("cannot mix float and polynomial coefficients")
    return best


def ring_of(values: Iterable) -> Ring:
    return join(*(ring_of_value(v) for v in values))
