import logging
from fractions import Fraction

from beartype import beartype
from beartype.typing import Iterator, List, Mapping, Sequence, Tuple, Union

from compositae.composita import Composita, from_series
from compositae.errors import EngineError, TriangleIndexError
from compositae.exact import factorial, multinomial
from compositae.mpoly import MPoly
from compositae.ring import POLYNOMIAL, Coefficient, join, ring_of
from compositae.series import Series

Composition = Tuple[int, ...]


@beartype
def enumerate_compositions(n: int, k: int) -> Iterator[Composition]:
    """Ordered k-part compositions of n in lexicographic order.

    Iterative successor: the rightmost part that can grow while leaving at
    least a 1 for every later part is incremented and the tail is reset to
    (1, ..., 1, rest)."""
    if not 1 <= k <= n:
        return
    parts = [1] * (k - 1) + [n - k + 1]
    while True:
        yield tuple(parts)
        tail = 0
        i = k - 2
        while i >= 0:
            tail += parts[i + 1]
            if tail > k - 1 - i:
                break
            i -= 1
        if i < 0:
            return
        parts[i] += 1
        rest = tail - 1
        for j in range(i + 1, k - 1):
            parts[j] = 1
            rest -= 1
        parts[k - 1] = rest


@beartype
def bell_bruteforce(n: int, k: int) -> MPoly:
    """B(n, k) = n!/k! * sum over k-part compositions of prod y_l / l!."""
    if not 1 <= k <= n:
        raise TriangleIndexError(n, k, n)
    terms = {}
    for parts in enumerate_compositions(n, k):
        exponents = [0] * (n - k + 1)
        for p in parts:
            exponents[p - 1] += 1
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + multinomial(n, list(parts))
    # each composition contributes n!/prod(l!); the 1/k! folds in here
    return MPoly({e: Fraction(c, factorial(k)) for e, c in terms.items()})


class BellTriangle:
    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[MPoly]]):
        self._rows = tuple(tuple(r) for r in rows)

    # order
    @property
    def order(self) -> int:
        return len(self._rows)

    def __getitem__(self, index) -> MPoly:
        n, k = index
        if not 1 <= k <= n <= len(self._rows):
            raise TriangleIndexError(n, k, len(self._rows))
        return self._rows[n - 1][k - 1]

    def row(self, n: int) -> List[MPoly]:
        if not 1 <= n <= len(self._rows):
            raise TriangleIndexError(n, 1, len(self._rows))
        return list(self._rows[n - 1])

    def rows(self) -> List[List[MPoly]]:
        return [list(r) for r in self._rows]

    def evaluate(self, point: Union[Mapping[int, Coefficient], Sequence[Coefficient]]) -> List[List[Coefficient]]:
        return [[p.evaluate(point) for p in row] for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, BellTriangle):
            return NotImplemented
        return self._rows == other._rows

    __hash__ = None

    def __repr__(self):
        return f"BellTriangle(order={self.order})"


@beartype
def bell_generic(order: int) -> BellTriangle:
    """Symbolic B(n, k) for n <= order, through the composita of sum d_i z^i."""
    if order < 1:
        raise ValueError("bell_generic needs order >= 1")
    generic = Series([MPoly.zero()] + [MPoly.var(i) for i in range(1, order + 1)], POLYNOMIAL)
    c = from_series(generic)
    scaled = {i: MPoly.var(i) / factorial(i) for i in range(1, order + 1)}
    rows = []
    for n in range(1, order + 1):
        row = []
        for k in range(1, n + 1):
            b = c[n, k].substitute(scaled) * (factorial(n) // factorial(k))
            if any(v.denominator != 1 for v in b.coefficients()):
                raise EngineError(f"B({n}, {k}) has non-integral coefficients: {b}")
            row.append(b)
        rows.append(row)
    logging.debug(f"bell_generic: order {order}")
    return BellTriangle(rows)


@beartype
def faa_di_bruno(n: int, g_derivs: Sequence[Coefficient], bell_row: Sequence[Coefficient]) -> Coefficient:
    """n-th derivative of g(y(x)): sum_k g^(k)(y(x)) * B(n, k)(y'(x), ...)."""
    if len(g_derivs) < n or len(bell_row) < n:
        raise ValueError(f"need {n} outer derivatives and Bell values, got {len(g_derivs)} and {len(bell_row)}")
    ring = join(ring_of(g_derivs[:n]), ring_of(bell_row[:n]))
    total = ring.zero
    for k in range(1, n + 1):
        total = total + g_derivs[k - 1] * bell_row[k - 1]
    return total


@beartype
def chain_derivatives(g_derivs: Sequence[Coefficient], y_derivs: Sequence[Coefficient]) -> List[Coefficient]:
    """(a', ..., a^(N)) for a = g(y(x)) from the derivative sequences of g at y(x) and of y at x."""
    order = min(len(g_derivs), len(y_derivs))
    c: Composita = from_series(Series.from_derivatives(y_derivs[:order]))
    out = []
    for n in range(1, order + 1):
        bell_row = [c[n, k] * (factorial(n) // factorial(k)) for k in range(1, n + 1)]
        out.append(faa_di_bruno(n, g_derivs, bell_row))
    return out
