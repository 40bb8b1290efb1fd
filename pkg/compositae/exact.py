"""Exact integers, rationals and the combinatorial number families.

`Rational` is `fractions.Fraction`. The tables behind `factorial`,
`stirling1_signed`, `stirling1_unsigned`, `stirling2` and `catalan` grow
lazily and are shared by every thread: growth happens under a lock, and rows
are only ever appended, so readers never see a partially built row.

Stirling numbers of the first kind come in both conventions. The ln and
arctan closed forms use the signed s(n, k) (the z^2 coefficient of
ln(1 + z/x) is -1/(2x^2)).
"""

import threading
from fractions import Fraction

from beartype import beartype
from beartype.typing import Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class CombTables:
    def __init__(self):
        self._lock = threading.Lock()
        self._factorials = [1]
        self._s1 = [[1]]
        self._s2 = [[1]]
        self._catalan = [1]

    def factorial(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative number: {n}")
        if n >= len(self._factorials):
            with self._lock:
                while len(self._factorials) <= n:
                    m = len(self._factorials)
                    self._factorials.append(self._factorials[-1] * m)
        return self._factorials[n]

    def stirling1_signed(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._s1):
            with self._lock:
                while len(self._s1) <= n:
                    m = len(self._s1) - 1
                    prev = self._s1[m]
                    # s(m+1, j) = s(m, j-1) - m*s(m, j)
                    row = [0] * (m + 2)
                    for j in range(m + 2):
                        left = prev[j - 1] if j >= 1 else 0
                        right = prev[j] if j <= m else 0
                        row[j] = left - m * right
                    self._s1.append(row)
        return self._s1[n][k]

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._s2):
            with self._lock:
                while len(self._s2) <= n:
                    m = len(self._s2) - 1
                    prev = self._s2[m]
                    row = [0] * (m + 2)
                    for j in range(m + 2):
                        left = prev[j - 1] if j >= 1 else 0
                        right = prev[j] if j <= m else 0
                        row[j] = j * right + left
                    self._s2.append(row)
        return self._s2[n][k]

    def catalan(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"catalan of negative index: {n}")
        if n >= len(self._catalan):
            with self._lock:
                while len(self._catalan) <= n:
                    m = len(self._catalan)
                    # Cat(m) = Cat(m-1) * 2(2m-1) / (m+1)
                    self._catalan.append(self._catalan[-1] * 2 * (2 * m - 1) // (m + 1))
        return self._catalan[n]


TABLES = CombTables()


@beartype
def factorial(n: int) -> int:
    return TABLES.factorial(n)


@beartype
def falling_factorial(a: Scalar, n: int) -> Scalar:
    result = 1
    for i in range(n):
        result *= a - i
    return result


@beartype
def binomial(n: int, k: int) -> int:
    """C(n, k) with the generalized upper index: n(n-1)...(n-k+1)/k!.

    Valid for any integer n, including negative n and n < k (where it is 0
    for non-negative n)."""
    if k < 0:
        return 0
    if 0 <= n:
        if k > n:
            return 0
        return TABLES.factorial(n) // (TABLES.factorial(k) * TABLES.factorial(n - k))
    return falling_factorial(n, k) // TABLES.factorial(k)


@beartype
def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n or any(p < 0 for p in parts):
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    result = TABLES.factorial(n)
    for p in parts:
        result //= TABLES.factorial(p)
    return result


@beartype
def stirling1_signed(n: int, k: int) -> int:
    return TABLES.stirling1_signed(n, k)


@beartype
def stirling1_unsigned(n: int, k: int) -> int:
    return abs(TABLES.stirling1_signed(n, k))


@beartype
def stirling2(n: int, k: int) -> int:
    return TABLES.stirling2(n, k)


@beartype
def catalan(n: int) -> int:
    return TABLES.catalan(n)


@beartype
def lah(n: int, k: int) -> int:
    if k < 1 or k > n:
        return 1 if n == k == 0 else 0
    return binomial(n - 1, k - 1) * factorial(n) // factorial(k)


@beartype
def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def _integer_root(n: int, r: int) -> Optional[int]:
    if n < 0:
        return None
    if n < 2:
        return n
    # Newton iteration on integers
    guess = 1 << ((n.bit_length() + r - 1) // r)
    while True:
        nxt = ((r - 1) * guess + n // guess ** (r - 1)) // r
        if nxt >= guess:
            break
        guess = nxt
    return guess if guess**r == n else None


@beartype
def integer_root(q: Scalar, r: int) -> Optional[Fraction]:
    """Exact r-th root of a non-negative rational, or None when irrational."""
    q = Fraction(q)
    num = _integer_root(q.numerator, r)
    den = _integer_root(q.denominator, r)
    if num is None or den is None:
        return None
    return Fraction(num, den)
