import logging

from beartype import beartype
from beartype.typing import List, Optional, Sequence

from compositae.errors import NotDeltaSeriesError
from compositae.exact import factorial
from compositae.ring import Coefficient, Ring, join, ring_of


class Series:
    """Truncated power series c0 + c1 z + ... + cN z^N over a coefficient ring.

    The order N is part of the value: terms above z^N are unknown, not zero,
    so an operation on series of different orders truncates to the smaller."""

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Sequence[Coefficient], ring: Optional[Ring] = None):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant term")
        self._ring = ring if ring is not None else ring_of(coeffs)
        self._coeffs = tuple(coeffs)

    @classmethod
    def zeros(cls, order: int, ring: Ring) -> "Series":
        return cls([ring.zero] * (order + 1), ring)

    @classmethod
    def constant(cls, c, order: int, ring: Optional[Ring] = None) -> "Series":
        ring = ring if ring is not None else ring_of([c])
        return cls([c] + [ring.zero] * order, ring)

    @classmethod
    def identity(cls, order: int, ring: Ring) -> "Series":
        """The series z."""
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(coeffs, ring)

    @classmethod
    def from_derivatives(cls, derivatives: Sequence[Coefficient], ring: Optional[Ring] = None) -> "Series":
        """Y(z) = sum y^(i)/i! z^i for derivatives = (y', y'', ..., y^(N))."""
        ring = ring if ring is not None else ring_of(derivatives)
        coeffs = [ring.zero]
        for i, d in enumerate(derivatives, start=1):
            coeffs.append(ring.coerce(d) / factorial(i))
        return cls(coeffs, ring)

    # order
    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    # ring
    @property
    def ring(self) -> Ring:
        return self._ring

    # coeffs
    @property
    def coeffs(self):
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def is_delta(self) -> bool:
        return self._coeffs[0] == 0

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self._coeffs[: order + 1], self._ring)

    def derivative_values(self) -> List[Coefficient]:
        """(y', y'', ..., y^(N)) recovered as n! c_n."""
        return [c * factorial(n) for n, c in enumerate(self._coeffs) if n > 0]

    def _align(self, other: "Series"):
        order = min(self.order, other.order)
        return order, join(self._ring, other._ring)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Series):
            return self + Series.constant(other, self.order, join(self._ring, ring_of([other])))
        order, ring = self._align(other)
        return Series([self._coeffs[n] + other._coeffs[n] for n in range(order + 1)], ring)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self._coeffs], self._ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        ring = join(self._ring, ring_of([c]))
        return Series([c * a for a in self._coeffs], ring)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        order, ring = self._align(other)
        a = self._coeffs
        b = other._coeffs
        out = []
        for n in range(order + 1):
            acc = ring.zero
            for i in range(n + 1):
                if a[i] == 0 or b[n - i] == 0:
                    continue
                acc = acc + a[i] * b[n - i]
            out.append(acc)
        return Series(out, ring)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Series.constant(self._ring.one, self.order, self._ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @beartype
    def compose(self, inner: "Series") -> "Series":
        """g(f(z)) for g = self and a delta series f, by Horner's scheme."""
        if not inner.is_delta():
            raise NotDeltaSeriesError("inner series")
        order, ring = self._align(inner)
        inner = inner.truncate(order)
        result = Series.constant(self._coeffs[order], order, ring)
        for n in range(order - 1, -1, -1):
            result = result * inner + self._coeffs[n]
        logging.debug(f"compose: order {order}, {ring}")
        return result

    def equals(self, other: "Series", ring: Optional[Ring] = None) -> bool:
        if self.order != other.order:
            return False
        ring = ring if ring is not None else join(self._ring, other._ring)
        return all(ring.equal(a, b) for a, b in zip(self._coeffs, other._coeffs))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self):
        return f"Series({list(self._coeffs)!r}, order={self.order})"
