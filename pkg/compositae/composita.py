"""Compositae of shifted generating functions and the theorems that combine them.

For a function y(x) the shifted series Y(x, z) = y(x+z) - y(x) has zero
constant term, and its composita is the triangle

    [Y(x, z)]^k = sum_{n >= k} Y(n, k, x) z^n,    1 <= k <= n <= N.

The partial Bell polynomial is B(n, k) = n!/k! * Y(n, k, x). Sum, product,
composition and inversion of functions map to operations on these triangles;
`from_series` computes a triangle directly from the series and serves as the
reference every other construction is checked against.

All values are immutable; every function here is pure.
"""

import logging

from beartype import beartype
from beartype.typing import Callable, List, Optional, Sequence

from compositae import constants
from compositae.errors import (
    NonInvertibleError,
    NotDeltaSeriesError,
    OrderMismatchError,
    TriangleIndexError,
)
from compositae.exact import binomial, factorial
from compositae.ring import RATIONAL, Coefficient, Ring, join, ring_of
from compositae.series import Series


class Composita:
    __slots__ = ("_rows", "_ring")

    def __init__(self, rows: Sequence[Sequence[Coefficient]], ring: Optional[Ring] = None):
        if len(rows) == 0:
            raise ValueError("a composita has order at least 1")
        for n, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError(f"row {n} has {len(row)} entries")
        self._rows = tuple(tuple(row) for row in rows)
        self._ring = ring if ring is not None else ring_of(v for row in rows for v in row)

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int, int], Coefficient], ring: Optional[Ring] = None) -> "Composita":
        return cls([[fn(n, k) for k in range(1, n + 1)] for n in range(1, order + 1)], ring)

    # order
    @property
    def order(self) -> int:
        return len(self._rows)

    # ring
    @property
    def ring(self) -> Ring:
        return self._ring

    def __getitem__(self, index):
        n, k = index
        if n < 1 or n > len(self._rows):
            raise TriangleIndexError(n, k, len(self._rows))
        if k < 1 or k > n:
            return self._ring.zero
        return self._rows[n - 1][k - 1]

    def row(self, n: int) -> List[Coefficient]:
        if n < 1 or n > len(self._rows):
            raise TriangleIndexError(n, 1, len(self._rows))
        return list(self._rows[n - 1])

    def rows(self) -> List[List[Coefficient]]:
        return [list(r) for r in self._rows]

    def truncate(self, order: int) -> "Composita":
        if order >= self.order:
            return self
        return Composita(self._rows[:order], self._ring)

    def map(self, fn: Callable[[Coefficient], Coefficient], ring: Optional[Ring] = None) -> "Composita":
        return Composita([[fn(v) for v in row] for row in self._rows], ring)

    def scale(self, c) -> "Composita":
        """Composita of c*f: entry (n, k) times c^k."""
        ring = join(self._ring, ring_of([c]))
        return Composita([[v * c**k for k, v in enumerate(row, start=1)] for row in self._rows], ring)

    def diagonal_law_holds(self) -> bool:
        first = self[1, 1]
        return all(self._ring.equal(self[n, n], first**n) for n in range(1, self.order + 1))

    def equals(self, other: "Composita", ring: Optional[Ring] = None) -> bool:
        if self.order != other.order:
            return False
        ring = ring if ring is not None else join(self._ring, other._ring)
        return all(
            ring.equal(a, b)
            for ra, rb in zip(self._rows, other._rows)
            for a, b in zip(ra, rb)
        )

    def __eq__(self, other):
        if not isinstance(other, Composita):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Composita):
            return NotImplemented
        return add(self, other)

    def __repr__(self):
        return f"Composita(order={self.order}, ring={self._ring.name})"


class PowerCoeffs:
    """Coefficients F(n, k) of [f(x+z)]^k for 0 <= n, k <= N, constant terms included."""

    __slots__ = ("_table", "_f0", "_ring")

    def __init__(self, table: Sequence[Sequence[Coefficient]], f0: Coefficient, ring: Optional[Ring] = None):
        self._table = tuple(tuple(r) for r in table)
        self._f0 = f0
        self._ring = ring if ring is not None else ring_of([f0] + [v for r in table for v in r])

    @classmethod
    def from_function(cls, order: int, f0: Coefficient, fn: Callable[[int, int], Coefficient], ring: Optional[Ring] = None) -> "PowerCoeffs":
        table = []
        for n in range(order + 1):
            table.append([f0**k if n == 0 else fn(n, k) for k in range(order + 1)])
        return cls(table, f0, ring)

    # order
    @property
    def order(self) -> int:
        return len(self._table) - 1

    # f0
    @property
    def f0(self):
        return self._f0

    # ring
    @property
    def ring(self) -> Ring:
        return self._ring

    def __getitem__(self, index):
        n, k = index
        if n < 0 or k < 0 or n > self.order or k > self.order:
            raise TriangleIndexError(n, k, self.order)
        return self._table[n][k]

    def __repr__(self):
        return f"PowerCoeffs(order={self.order}, ring={self._ring.name})"


def _check_orders(a, b):
    if a.order != b.order:
        raise OrderMismatchError(a.order, b.order)


@beartype
def identity(order: int, ring: Optional[Ring] = None) -> Composita:
    """The delta triangle: composita of Y(z) = z."""
    ring = ring if ring is not None else RATIONAL
    return Composita.from_function(order, lambda n, k: ring.one if n == k else ring.zero, ring)


@beartype
def from_series(f: Series, order: Optional[int] = None) -> Composita:
    """Entry (n, k) is the z^n coefficient of f^k."""
    if not f.is_delta():
        raise NotDeltaSeriesError()
    order = f.order if order is None else min(order, f.order)
    if order < 1:
        raise ValueError("from_series needs a series of order at least 1")
    f = f.truncate(order)
    rows = [[f.ring.zero] * n for n in range(1, order + 1)]
    power = f
    for k in range(1, order + 1):
        for n in range(k, order + 1):
            rows[n - 1][k - 1] = power[n]
        if k < order:
            power = power * f
    logging.debug(f"from_series: order {order}, {f.ring}")
    return Composita(rows, f.ring)


@beartype
def to_bell(c: Composita, n: int, k: int) -> Coefficient:
    """B(n, k) = n!/k! * Y(n, k)."""
    if not 1 <= k <= n <= c.order:
        raise TriangleIndexError(n, k, c.order)
    return c[n, k] * (factorial(n) // factorial(k))


def bell_triangle(c: Composita) -> List[List[Coefficient]]:
    return [[to_bell(c, n, k) for k in range(1, n + 1)] for n in range(1, c.order + 1)]


@beartype
def power_coeffs(c: Composita, f0: Coefficient) -> PowerCoeffs:
    """F(n, k) = sum_j C(k, j) F^D(n, j) f0^(k-j), the coefficients of [f(x+z)]^k."""
    ring = join(c.ring, ring_of([f0]))
    order = c.order

    def delta(n, j):
        if j == 0:
            return ring.one if n == 0 else ring.zero
        if n == 0:
            return ring.zero
        return c[n, j]

    table = []
    for n in range(order + 1):
        row = []
        for k in range(order + 1):
            if n == 0:
                row.append(ring.one * f0**k)
                continue
            acc = ring.zero
            for j in range(1, min(k, n) + 1):
                acc = acc + binomial(k, j) * delta(n, j) * f0 ** (k - j)
            row.append(acc)
        table.append(row)
    return PowerCoeffs(table, f0, ring)


@beartype
def from_power_coeffs(p: PowerCoeffs) -> Composita:
    """Composita of f(x+z) - f(x) from the power table of f(x+z).

    Y(n, k) = sum_{j=1}^k C(k, j) F(n, j) (-f0)^(k-j)
    """
    ring = p.ring

    def entry(n, k):
        acc = ring.zero
        for j in range(1, k + 1):
            acc = acc + binomial(k, j) * p[n, j] * (-p.f0) ** (k - j)
        return acc

    return Composita.from_function(p.order, entry, ring)

@beartype
def add(a: Composita, b: Composita) -> Composita:
    """Composita of F(x, z) + G(x, z).

    A(n, k) = F(n, k) + sum_{j=1}^{k-1} C(k, j) sum_{i=j}^{n-k+j} F(i, j) G(n-i, k-j) + G(n, k)
    """
    _check_orders(a, b)
    ring = join(a.ring, b.ring)

    def entry(n, k):
        acc = a[n, k] + b[n, k]
        for j in range(1, k):
            inner = ring.zero
            for i in range(j, n - k + j + 1):
                inner = inner + a[i, j] * b[n - i, k - j]
            acc = acc + binomial(k, j) * inner
        return acc

    return Composita.from_function(a.order, entry, ring)


@beartype
def product(f: PowerCoeffs, g: PowerCoeffs, fg0: Optional[Coefficient] = None) -> Composita:
    """Composita of f(x+z)g(x+z) - f(x)g(x).

    Y(n, k) = sum_{j=0}^k C(k, j) (sum_{i=0}^n F(i, j) G(n-i, j)) (-fg0)^(k-j)
    """
    _check_orders(f, g)
    if f.order < 1:
        raise ValueError("product needs power coefficients of order at least 1")
    fg0 = f.f0 * g.f0 if fg0 is None else fg0
    ring = join(f.ring, g.ring, ring_of([fg0]))

    def entry(n, k):
        acc = ring.zero
        for j in range(0, k + 1):
            conv = ring.zero
            for i in range(0, n + 1):
                conv = conv + f[i, j] * g[n - i, j]
            acc = acc + binomial(k, j) * conv * (-fg0) ** (k - j)
        return acc

    return Composita.from_function(f.order, entry, ring)


@beartype
def compose(inner: Composita, outer_at_inner: Composita) -> Composita:
    """Composita of g(f(x+z)) - g(f(x)).

    `inner` is the composita of f at x; `outer_at_inner` is the composita of
    g evaluated at the point f(x).

    Y(n, m) = sum_{k=m}^n F(n, k) G(k, m)
    """
    _check_orders(inner, outer_at_inner)
    ring = join(inner.ring, outer_at_inner.ring)

    def entry(n, m):
        acc = ring.zero
        for k in range(m, n + 1):
            acc = acc + inner[n, k] * outer_at_inner[k, m]
        return acc

    return Composita.from_function(inner.order, entry, ring)


@beartype
def compose_power_coeffs(inner: Composita, outer_power: PowerCoeffs) -> PowerCoeffs:
    """Power coefficients of y(f(x+z)) from f's composita and y's power table at f(x).

    A(0, m) = y(f(x))^m,  A(n, m) = sum_{k=1}^n F(n, k) Y(k, m) for n > 0.
    """
    _check_orders(inner, outer_power)
    ring = join(inner.ring, outer_power.ring)

    def entry(n, m):
        acc = ring.zero
        for k in range(1, n + 1):
            acc = acc + inner[n, k] * outer_power[k, m]
        return acc

    return PowerCoeffs.from_function(inner.order, outer_power.f0, entry, ring)


def _leading_inverse(f: Composita):
    lead = f[1, 1]
    try:
        inv = f.ring.inverse(lead)
    except ZeroDivisionError:
        raise NonInvertibleError(f"leading entry {lead} is not invertible")
    return inv


@beartype
def invert_forward(f: Composita) -> Composita:
    """Composita of the inverse function by solving sum_k Y(n, k) F(k, m) = delta(n, m) along each row.

    `f` is the composita of f at x; the result is the composita of the
    inverse function at the point f(x).

    Y(n, n) = 1/F(n, n),  Y(n, m) = -1/F(m, m) sum_{k=m+1}^n Y(n, k) F(k, m)
    """
    ring = f.ring
    lead_inv = _leading_inverse(f)
    diag_inv = [None] + [lead_inv**m for m in range(1, f.order + 1)]
    rows = []
    for n in range(1, f.order + 1):
        row = [ring.zero] * n
        row[n - 1] = diag_inv[n]
        for m in range(n - 1, 0, -1):
            acc = ring.zero
            for k in range(m + 1, n + 1):
                acc = acc + row[k - 1] * f[k, m]
            row[m - 1] = -acc * diag_inv[m]
        rows.append(row)
    logging.debug(f"invert_forward: order {f.order}, {ring}")
    return Composita(rows, ring)


@beartype
def invert_backward(f: Composita) -> Composita:
    """Composita of the inverse function by solving sum_k F(n, k) Y(k, m) = delta(n, m) down each column.

    Same input and output points as `invert_forward`; a lower triangular
    inverse is two-sided, so the two recurrences agree entrywise.

    Y(n, n) = 1/F(n, n),  Y(n, m) = -1/F(n, n) sum_{k=m}^{n-1} F(n, k) Y(k, m)
    """
    ring = f.ring
    lead_inv = _leading_inverse(f)
    diag_inv = [None] + [lead_inv**n for n in range(1, f.order + 1)]
    rows: List[List[Coefficient]] = []
    for n in range(1, f.order + 1):
        row = [ring.zero] * n
        row[n - 1] = diag_inv[n]
        for m in range(1, n):
            acc = ring.zero
            for k in range(m, n):
                acc = acc + f[n, k] * rows[k - 1][m - 1]
            row[m - 1] = -acc * diag_inv[n]
        rows.append(row)
    logging.debug(f"invert_backward: order {f.order}, {ring}")
    return Composita(rows, ring)


@beartype
def delta_check(a: Composita, b: Composita, ring: Optional[Ring] = None) -> bool:
    """True when composing `a` with `b` gives the identity triangle."""
    _check_orders(a, b)
    product_ = compose(a, b)
    ring = ring if ring is not None else product_.ring
    return all(
        ring.equal(product_[n, m], ring.one if n == m else ring.zero)
        for n in range(1, a.order + 1)
        for m in range(1, n + 1)
    )


@beartype
def close(a: Composita, b: Composita, rel_tol: float = constants.FLOAT_REL_TOL) -> bool:
    """Entrywise agreement of two triangles of the same order.

    Exact rings compare exactly. Otherwise every entry must agree to within
    rel_tol times the largest magnitude in either triangle (at least 1)."""
    if a.order != b.order:
        return False
    ring = join(a.ring, b.ring)
    if ring.exact:
        return a.equals(b, ring)
    values = [abs(float(v)) for c in (a, b) for row in c.rows() for v in row]
    scale = max([1.0] + values)
    return all(
        abs(float(u) - float(v)) <= rel_tol * scale
        for ra, rb in zip(a.rows(), b.rows())
        for u, v in zip(ra, rb)
    )
