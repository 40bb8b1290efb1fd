"""Closed-form compositae of elementary functions and the atom registry.

Every closed form takes the evaluation point `x` and the triangle order and
returns the composita of y(x+z) - y(x). Points are ints, Fractions or floats;
ints are promoted to Fraction. Algebraic entries stay exact at rational points
(roots are exact when the radicand is a perfect power), transcendental entries
are exact only where their value is rational (sin, cos, tan and exp at 0,
arctan everywhere, x ln x at 1) and otherwise return floats.

Each atom in CATALOG pairs its closed form with an independent derivative
oracle that never touches the composita engine.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from beartype import beartype
from beartype.typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from compositae import constants
from compositae.bellpoly import faa_di_bruno
from compositae.composita import (
    Composita,
    PowerCoeffs,
    add,
    compose,
    from_power_coeffs,
    from_series,
    identity,
    invert_forward,
    power_coeffs,
    product,
    to_bell,
)
from compositae.errors import ArityError, DomainError, UnknownAtomError
from compositae.exact import (
    binomial,
    factorial,
    falling_factorial,
    integer_root,
    stirling1_signed,
    stirling2,
)
from compositae.ring import Coefficient, ring_of
from compositae.series import Series

Point = Union[int, Fraction, float]
Value = Union[Fraction, float]
Params = Tuple[Fraction, ...]


def as_point(x: Point) -> Value:
    if isinstance(x, bool):
        raise TypeError("a point cannot be a bool")
    if isinstance(x, int):
        return Fraction(x)
    return x


def _exact(x) -> bool:
    return isinstance(x, Fraction)


def _exp(x):
    return Fraction(1) if _exact(x) and x == 0 else math.exp(x)


def _sin(x):
    return Fraction(0) if _exact(x) and x == 0 else math.sin(x)


def _cos(x):
    return Fraction(1) if _exact(x) and x == 0 else math.cos(x)


def _ln(x):
    return Fraction(0) if _exact(x) and x == 1 else math.log(x)


def _root(x, r: int):
    """r-th root of x > 0, exact when x is a rational perfect power."""
    if _exact(x):
        exact = integer_root(x, r)
        if exact is not None:
            return exact
    return float(x) ** (1.0 / r)


def _require(atom: str, x, ok: bool, reason: str):
    if not ok:
        raise DomainError(atom, x, reason)


# algebraic closed forms


@beartype
def quad(a: Coefficient, b: Coefficient, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of a z + b z^2: C(k, n-k) a^(2k-n) b^(n-k)."""
    ring = ring_of([a, b])

    def entry(n, k):
        if n - k > k:
            return ring.zero
        return binomial(k, n - k) * a ** (2 * k - n) * b ** (n - k)

    return Composita.from_function(order, entry, ring)


@beartype
def cubic(a: Coefficient, b: Coefficient, c: Coefficient, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of a z + b z^2 + c z^3."""
    ring = ring_of([a, b, c])

    def entry(n, k):
        acc = ring.zero
        for j in range(k + 1):
            if n - k - j < 0 or 2 * j + k - n < 0:
                continue
            coeff = binomial(k, j) * binomial(j, n - k - j)
            if coeff == 0:
                continue
            acc = acc + coeff * a ** (k - j) * b ** (2 * j + k - n) * c ** (n - k - j)
        return acc

    return Composita.from_function(order, entry, ring)


def _positive_int(atom: str, x, m) -> int:
    if Fraction(m).denominator != 1 or m < 1:
        raise DomainError(atom, x, f"exponent must be a positive integer, got {m}")
    return int(m)


@beartype
def pow_m(x: Point, m: Union[int, Fraction], order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of (x+z)^m - x^m: x^(km-n) sum_j C(k, j) C(jm, n) (-1)^(k-j)."""
    x = as_point(x)
    m = _positive_int("pow", x, m)
    ring = ring_of([x])

    def entry(n, k):
        if k * m < n:
            return ring.zero
        s = sum(binomial(k, j) * binomial(j * m, n) * (-1) ** (k - j) for j in range(k + 1))
        return s * x ** (k * m - n)

    return Composita.from_function(order, entry, ring)


@beartype
def neg_pow_m(x: Point, m: Union[int, Fraction], order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of (x+z)^-m - x^-m."""
    x = as_point(x)
    m = _positive_int("negpow", x, m)
    _require("negpow", x, x != 0, "pole at 0")

    def entry(n, k):
        s = sum(
            binomial(k, j) * (-1) ** (n + k - j) * binomial(n + j * m - 1, j * m - 1)
            for j in range(1, k + 1)
        )
        return s * x ** (-n - k * m)

    return Composita.from_function(order, entry, ring_of([x]))


@beartype
def recip(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of 1/(x+z) - 1/x: C(n-1, k-1) (-1)^n x^(-n-k)."""
    x = as_point(x)
    _require("recip", x, x != 0, "pole at 0")
    return Composita.from_function(
        order, lambda n, k: binomial(n - 1, k - 1) * (-1) ** n * x ** (-n - k), ring_of([x])
    )


@beartype
def geometric(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of 1/(1-x-z) - 1/(1-x): C(n-1, k-1) (1-x)^(-n-k)."""
    x = as_point(x)
    _require("geom", x, x != 1, "pole at 1")
    return Composita.from_function(
        order, lambda n, k: binomial(n - 1, k - 1) * (1 - x) ** (-n - k), ring_of([x])
    )


@beartype
def log_shift(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of ln(1 + z/x): k!/n! s(n, k) x^-n with signed Stirling numbers."""
    x = as_point(x)
    _require("ln", x, x > 0, "logarithm needs x > 0")
    return Composita.from_function(
        order,
        lambda n, k: Fraction(factorial(k), factorial(n)) * stirling1_signed(n, k) * x ** (-n),
        ring_of([x]),
    )


@beartype
def sqrt_catalan(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of sqrt(x+z) - sqrt(x) through the Catalan generating function.

    (k/n) C(2n-k-1, n-1) (-1)^(n-k) sqrt(x)^k 2^k 4^-n x^-n. With
    `literal=True` the x^-n factor is left out, which gives sqrt(x)/2 at
    (1, 1) instead of the derivative 1/(2 sqrt(x))."""
    x = as_point(x)
    _require("sqrt", x, x > 0, "square root needs x > 0")
    r = _root(x, 2)

    def entry(n, k):
        v = Fraction(k, n) * binomial(2 * n - k - 1, n - 1) * (-1) ** (n - k) * Fraction(2**k, 4**n) * r**k
        return v if literal else v * x ** (-n)

    return Composita.from_function(order, entry, ring_of([x, r]))


@beartype
def rsqrt(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of 1/sqrt(x+z) - 1/sqrt(x).

    (-1)^n sqrt(x)^-m 4^-n x^-n sum_{k=m}^n (k/n) C(2n-k-1, n-1) 2^k C(k-1, m-1).
    With `literal=True` the root enters as sqrt(x)^m and x^-n is dropped."""
    x = as_point(x)
    _require("rsqrt", x, x > 0, "square root needs x > 0")
    r = _root(x, 2)

    def entry(n, m):
        s = sum(
            Fraction(k, n) * binomial(2 * n - k - 1, n - 1) * 2**k * binomial(k - 1, m - 1)
            for k in range(m, n + 1)
        )
        v = (-1) ** n * Fraction(1, 4**n) * s
        if literal:
            return v * r**m
        return v * r ** (-m) * x ** (-n)

    return Composita.from_function(order, entry, ring_of([x, r]))


@beartype
def cbrt(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of cbrt(x+z) - cbrt(x).

    Diagonal cbrt(x)^m 3^-n x^-n; below it
    cbrt(x)^m (m/n) sum_{k=1}^{n-m} C(k, n-m-k) 3^(-2n+m+k) (-1)^k C(n+k-1, n-1) x^-n.
    `literal=True` drops x^-n on the diagonal only."""
    x = as_point(x)
    _require("cbrt", x, x > 0, "cube root needs x > 0")
    r = _root(x, 3)

    def entry(n, m):
        if n == m:
            v = r**m * Fraction(1, 3**n)
            return v if literal else v * x ** (-n)
        s = sum(
            binomial(k, n - m - k) * Fraction(3) ** (-2 * n + m + k) * (-1) ** k * binomial(n + k - 1, n - 1)
            for k in range(1, n - m + 1)
        )
        return r**m * Fraction(m, n) * s * x ** (-n)

    return Composita.from_function(order, entry, ring_of([x, r]))


@beartype
def poly_entry(coeffs: Sequence[Union[int, Fraction]], x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of p(x+z) - p(x) for p = c0 + c1 x + c2 x^2 + c3 x^3."""
    x = as_point(x)
    if not 1 <= len(coeffs) <= 4:
        raise ArityError("poly", len(coeffs), "1 to 4")
    c0, c1, c2, c3 = (list(coeffs) + [0, 0, 0])[:4]
    a = c1 + 2 * c2 * x + 3 * c3 * x**2
    b = c2 + 3 * c3 * x
    return cubic(a, b, c3, order)


@beartype
def fibonacci_gf(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of 1/(1-x-x^2) in closed form:
    sum_{k=m}^n C(k-1, m-1) C(k, n-k) (2x+1)^(2k-n) (1-x-x^2)^(-m-k)."""
    x = as_point(x)
    d = 1 - x - x**2
    _require("fib", x, d != 0, "pole where x^2 + x = 1")
    u = 2 * x + 1

    def entry(n, m):
        acc = 0
        for k in range(m, n + 1):
            c = binomial(k - 1, m - 1) * binomial(k, n - k)
            if c:
                acc += c * u ** (2 * k - n) * d ** (-m - k)
        return acc

    return Composita.from_function(order, entry, ring_of([x]))


@beartype
def square_plus_ln(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of x^2 + ln x, expanded over both summands:
    sum_j C(k, j) sum_i j!/i! s(i, j) C(k-j, n-i-k+j) 2^(2(k-j)-n+i) x^(2(k-j)-n)."""
    x = as_point(x)
    _require("ln", x, x > 0, "logarithm needs x > 0")

    def entry(n, k):
        acc = 0
        for j in range(k + 1):
            for i in range(j, n - k + j + 1):
                c = binomial(k - j, n - i - k + j)
                if c == 0:
                    continue
                s = stirling1_signed(i, j)
                if s == 0:
                    continue
                acc += (
                    binomial(k, j)
                    * Fraction(factorial(j), factorial(i))
                    * s
                    * c
                    * Fraction(2) ** (2 * (k - j) - n + i)
                    * x ** (2 * (k - j) - n)
                )
        return acc

    return Composita.from_function(order, entry, ring_of([x]))


# trigonometric


def _sin_z(order: int) -> Composita:
    # sin(z)^k
    def entry(n, k):
        if (n - k) % 2:
            return Fraction(0)
        s = sum(
            binomial(k, m) * (2 * m - k) ** n * (-1) ** ((n + k) // 2 - m) for m in range(k // 2 + 1)
        )
        return Fraction(2 * s, 2**k * factorial(n))

    return Composita.from_function(order, entry)


def _cos_power_coefficient(n: int, j: int) -> Fraction:
    # z^n coefficient of cos(z)^j, n >= 1
    if n % 2:
        return Fraction(0)
    s = sum(binomial(j, i) * (j - 2 * i) ** n for i in range((j - 1) // 2 + 1))
    return Fraction((-1) ** (n // 2) * s, 2 ** (j - 1) * factorial(n))


def _cos_m1_z(order: int) -> Composita:
    # (cos(z) - 1)^k
    def entry(n, k):
        return sum(
            binomial(k, j) * (-1) ** (k - j) * _cos_power_coefficient(n, j) for j in range(1, k + 1)
        )

    return Composita.from_function(order, entry)


@beartype
def sin_entry(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of cos x sin z + sin x (cos z - 1) by the sum theorem."""
    x = as_point(x)
    return add(_sin_z(order).scale(_cos(x)), _cos_m1_z(order).scale(_sin(x)))


@beartype
def cos_entry(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of cos x (cos z - 1) - sin x sin z by the sum theorem."""
    x = as_point(x)
    return add(_sin_z(order).scale(-_sin(x)), _cos_m1_z(order).scale(_cos(x)))


def tan_z(order: int) -> Composita:
    """Composita of tan z."""

    def entry(n, k):
        if (n - k) % 2:
            return Fraction(0)
        s = sum(
            Fraction(2) ** (n - j - 1)
            * stirling2(n, j)
            * factorial(j)
            * (-1) ** ((n + k) // 2 + j)
            * binomial(j - 1, k - 1)
            for j in range(k, n + 1)
        )
        return Fraction(2, factorial(n)) * s

    return Composita.from_function(order, entry)


def arctan_z(order: int) -> Composita:
    """Composita of arctan z, with signed Stirling numbers of the first kind."""

    def entry(n, k):
        if (n - k) % 2:
            return Fraction(0)
        s = sum(
            Fraction(2**j, factorial(j)) * binomial(n - 1, j - 1) * stirling1_signed(j, k)
            for j in range(k, n + 1)
        )
        return 2 * (-1) ** ((n - k) // 2) * Fraction(factorial(k), 2 ** (k + 1)) * s

    return Composita.from_function(order, entry)


def _tan(x):
    return Fraction(0) if _exact(x) and x == 0 else math.tan(x)


@beartype
def tan_entry(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of tan(x+z) - tan x = f(x, tan z), f(x, u) = sec(x)^2 u / (1 - tan(x) u)."""
    x = as_point(x)
    _require("tan", x, _exact(x) and x == 0 or abs(math.cos(x)) > 1e-12, "cos x = 0")
    t = _tan(x)
    sec2 = 1 + t * t
    outer = Composita.from_function(
        order, lambda k, m: binomial(k - 1, m - 1) * t ** (k - m) * sec2**m, ring_of([t])
    )
    return compose(tan_z(order), outer)


@beartype
def arctan_entry(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of arctan(x+z) - arctan x = arctan(z / (1 + x^2 + x z))."""
    x = as_point(x)
    d = 1 + x * x
    inner = Composita.from_function(
        order,
        lambda n, k: binomial(n - 1, k - 1) * (-1) ** (n - k) * x ** (n - k) / d**n,
        ring_of([x]),
    )
    return compose(inner, arctan_z(order))


# exponential family


@beartype
def exp_entry(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of e^x (e^z - 1): e^(kx) k!/n! S2(n, k)."""
    x = as_point(x)
    e = _exp(x)
    return Composita.from_function(
        order, lambda n, k: e**k * Fraction(factorial(k), factorial(n)) * stirling2(n, k), ring_of([e])
    )


def _x_exp_power(x, order: int) -> PowerCoeffs:
    e = _exp(x)

    def entry(n, k):
        s = sum(
            Fraction(k ** (n - i), factorial(n - i)) * binomial(k, i) * x ** (k - i)
            for i in range(min(n, k) + 1)
        )
        return e**k * s

    return PowerCoeffs.from_function(order, x * e, entry, ring_of([x, e]))


@beartype
def x_exp_entry(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of (x+z) e^(x+z) - x e^x.

    The table e^(kx) sum_i k^(n-i) C(k, i) x^(k-i)/(n-i)! holds the coefficients
    of [(x+z) e^(x+z)]^k; `literal=True` returns it as is, which is the
    composita only at x = 0."""
    x = as_point(x)
    p = _x_exp_power(x, order)
    if literal:
        return Composita.from_function(order, lambda n, k: p[n, k], p.ring)
    return from_power_coeffs(p)


@beartype
def lambert_w_derivs(order: int, x: Point) -> List[Value]:
    """W'(u), ..., W^(order)(u) at u = x e^x, by inverting the x e^x composita."""
    x = as_point(x)
    _require("lambertw", x, x > -1, "W is not differentiable past x = -1")
    w = invert_forward(x_exp_entry(x, order))
    return [w[n, 1] * factorial(n) for n in range(1, order + 1)]


@beartype
def lambert_w_derivs_recurrence(order: int, x: Point) -> List[Value]:
    """The same derivatives from sum_k W^(k) B(n, k) = delta(n, 1), Faa di Bruno applied to W(x e^x) = x."""
    x = as_point(x)
    _require("lambertw", x, x > -1, "W is not differentiable past x = -1")
    c = x_exp_entry(x, order)
    out: List[Value] = []
    for n in range(1, order + 1):
        acc = 1 if n == 1 else 0
        for k in range(1, n):
            acc = acc - out[k - 1] * to_bell(c, n, k)
        out.append(acc / to_bell(c, n, n))
    return out


def _x_shift_power(x, order: int) -> PowerCoeffs:
    # coefficients of (x+z)^k
    return PowerCoeffs.from_function(
        order, x, lambda n, k: binomial(k, n) * x ** (k - n) if k >= n else 0, ring_of([x])
    )


@beartype
def bernoulli_gf(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of x/(e^x - 1) as the product of x and 1/(e^x - 1).

    The power coefficients of 1/(e^x - 1) sum over k = 0..n; `literal=True` stops the sum at k = m."""
    x = as_point(x)
    _require("bernoulli", x, x != 0, "removable singularity at 0")
    e = _exp(x)
    d = e - 1

    def h(n, m):
        s = sum(
            (-1) ** k * factorial(k) * binomial(m + k - 1, m - 1) * stirling2(n, k) * d ** (-m - k) * e**k
            for k in range((m if literal else n) + 1)
        )
        return Fraction(1, factorial(n)) * s

    hp = PowerCoeffs.from_function(order, 1 / d, h, ring_of([d]))
    return product(_x_shift_power(x, order), hp)


@beartype
def x_ln_x(x: Point, a: Union[int, Fraction, float] = 1, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of a x ln x via the product theorem on x and ln x."""
    x = as_point(x)
    _require("xlnx", x, x > 0, "logarithm needs x > 0")
    ln_power = power_coeffs(log_shift(x, order), _ln(x))
    c = product(_x_shift_power(x, order), ln_power)
    return c.scale(as_point(a))


@beartype
def x_pow_ax(x: Point, a: Union[int, Fraction, float], order: int = constants.DEFAULT_ORDER) -> List[Value]:
    """Derivatives of x^(ax) = exp(a x ln x) by Faa di Bruno with g = exp."""
    x = as_point(x)
    a = as_point(a)
    c = x_ln_x(x, a, order)
    e = a * x
    v = x**e if _exact(e) and e.denominator == 1 else float(x) ** float(e)
    return [faa_di_bruno(n, [v] * n, [to_bell(c, n, k) for k in range(1, n + 1)]) for n in range(1, order + 1)]


@beartype
def recip_ln(x: Point, order: int = constants.DEFAULT_ORDER, literal: bool = False) -> Composita:
    """Composita of 1/ln x in closed form:
    sum_{k=m}^n k!/n! s(n, k) x^-n C(k-1, m-1) (-1)^k ln(x)^(-k-m).

    `literal=True` uses the exponent -n-k instead of -k-m."""
    x = as_point(x)
    _require("recipln", x, x > 0 and x != 1, "needs x > 0 and x != 1")
    lx = _ln(x)

    def entry(n, m):
        acc = 0
        for k in range(m, n + 1):
            p = -n - k if literal else -k - m
            acc += (
                Fraction(factorial(k), factorial(n))
                * stirling1_signed(n, k)
                * x ** (-n)
                * binomial(k - 1, m - 1)
                * (-1) ** k
                * lx**p
            )
        return acc

    return Composita.from_function(order, entry, ring_of([lx]))


@beartype
def x_over_sqrt_1mx2(x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of x/sqrt(1-x^2) as the product of x and rsqrt(1 - x^2)."""
    x = as_point(x)
    _require("xsqrt", x, -1 < x < 1, "needs |x| < 1")
    d = 1 - x * x
    inner = compose(quad(-2 * x, -1, order), rsqrt(d, order))
    return product(_x_shift_power(x, order), power_coeffs(inner, 1 / _root(d, 2)))


# derivative oracles


def to_mpf(x):
    if _exact(x):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def taylor_derivatives(fn: Callable, x, n: int) -> List[float]:
    """y'(x), ..., y^(n)(x) from mpmath's Taylor expansion at ORACLE_DPS digits."""
    with mpmath.workdps(constants.ORACLE_DPS):
        coeffs = mpmath.taylor(fn, to_mpf(x), n)
        return [float(coeffs[i] * mpmath.factorial(i)) for i in range(1, n + 1)]


def _power_derivs(x, p, root, n):
    # derivatives of x^p, where root = x^p
    return [falling_factorial(p, i) * root * x ** (-i) for i in range(1, n + 1)]


def _pow_derivs(x, m, n):
    out = []
    for i in range(1, n + 1):
        out.append(falling_factorial(m, i) * x ** (m - i) if i <= m else 0 * x)
    return out


def _poly_value(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def _poly_derivs(coeffs, x, n):
    out = []
    cs = list(coeffs)
    for _ in range(n):
        cs = [i * c for i, c in enumerate(cs)][1:]
        out.append(_poly_value(cs, x) if cs else 0 * x)
    return out


def _cycle(values, n):
    return [values[i % 4] for i in range(n)]


# registry


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    arity: Tuple[int, int]
    composita: Callable[[Value, Params, int], Composita]
    value: Callable[[Value, Params], Value]
    derivatives: Callable[[Value, Params, int], List[Value]]
    mp: Callable[[Params], Callable]
    domain: Callable[[Value, Params], Optional[str]] = lambda x, p: None
    inverse: Optional[Callable[[Value, Params], Value]] = None
    algebraic: bool = False

    def check(self, x, params: Params):
        lo, hi = self.arity
        if not lo <= len(params) <= hi:
            expected = str(lo) if lo == hi else f"{lo} to {hi}"
            raise ArityError(self.name, len(params), expected)
        reason = self.domain(x, params)
        if reason:
            raise DomainError(self.name, x, reason)

    @beartype
    def build(self, x: Point, params: Params = (), order: int = constants.DEFAULT_ORDER) -> Composita:
        x = as_point(x)
        self.check(x, params)
        logging.debug(f"catalog: {self.name}{params} at {x}, order {order}")
        return self.composita(x, params, order)

    def value_at(self, x: Point, params: Params = ()) -> Value:
        x = as_point(x)
        self.check(x, params)
        return self.value(x, params)

    def derivatives_at(self, x: Point, params: Params = (), n: int = constants.DEFAULT_ORDER) -> List[Value]:
        x = as_point(x)
        self.check(x, params)
        return self.derivatives(x, params, n)


def _m(params) -> int:
    return int(params[0])


def _positive_int_reason(params) -> Optional[str]:
    m = params[0]
    if Fraction(m).denominator != 1 or m < 1:
        return f"exponent must be a positive integer, got {m}"
    return None


def _inverse_pow(x, params):
    m = _m(params)
    if _exact(x) and x >= 0:
        r = integer_root(x, m)
        if r is not None:
            return r
    if x < 0:
        if m % 2 == 0:
            raise DomainError("pow", x, "even power has no real inverse at a negative value")
        return -(float(-x) ** (1.0 / m))
    return float(x) ** (1.0 / m)


def _inverse_lambert(x, params):
    if _exact(x) and x == 0:
        return Fraction(0)
    with mpmath.workdps(constants.ORACLE_DPS):
        return float(mpmath.re(mpmath.lambertw(to_mpf(x))))


def _asin(x, params):
    if _exact(x) and x == 0:
        return Fraction(0)
    return math.asin(x)


def _acos(x, params):
    if _exact(x) and x == 1:
        return Fraction(0)
    return math.acos(x)


def _atan(x, params):
    if _exact(x) and x == 0:
        return Fraction(0)
    return math.atan(x)


def _xsqrt_value(x, params):
    d = 1 - x * x
    r = _root(d, 2)
    return x / r


def _xlnx_a(params):
    return params[0] if params else Fraction(1)


def _xlnx_derivs(x, params, n):
    a = _xlnx_a(params)
    out = [a * (_ln(x) + 1)]
    for i in range(2, n + 1):
        out.append(a * (-1) ** i * factorial(i - 2) * x ** (1 - i))
    return out


def _bernoulli_value(x, params):
    return x / (_exp(x) - 1)


CATALOG: Dict[str, CatalogEntry] = {}


def register(entry: CatalogEntry):
    CATALOG[entry.name] = entry
    return entry


register(
    CatalogEntry(
        name="identity",
        arity=(0, 0),
        composita=lambda x, p, N: identity(N),
        value=lambda x, p: x,
        derivatives=lambda x, p, n: [Fraction(1)] + [Fraction(0)] * (n - 1),
        mp=lambda p: (lambda t: t),
        inverse=lambda x, p: x,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="pow",
        arity=(1, 1),
        composita=lambda x, p, N: pow_m(x, p[0], N),
        value=lambda x, p: x ** _m(p),
        derivatives=lambda x, p, n: _pow_derivs(x, _m(p), n),
        mp=lambda p: (lambda t: t ** int(p[0])),
        domain=lambda x, p: _positive_int_reason(p),
        inverse=_inverse_pow,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="negpow",
        arity=(1, 1),
        composita=lambda x, p, N: neg_pow_m(x, p[0], N),
        value=lambda x, p: x ** -_m(p),
        derivatives=lambda x, p, n: [falling_factorial(-_m(p), i) * x ** (-_m(p) - i) for i in range(1, n + 1)],
        mp=lambda p: (lambda t: t ** -int(p[0])),
        domain=lambda x, p: _positive_int_reason(p) or ("pole at 0" if x == 0 else None),
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="recip",
        arity=(0, 0),
        composita=lambda x, p, N: recip(x, N),
        value=lambda x, p: 1 / x,
        derivatives=lambda x, p, n: [(-1) ** i * factorial(i) * x ** (-i - 1) for i in range(1, n + 1)],
        mp=lambda p: (lambda t: 1 / t),
        domain=lambda x, p: "pole at 0" if x == 0 else None,
        inverse=lambda x, p: 1 / x,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="ln",
        arity=(0, 0),
        composita=lambda x, p, N: log_shift(x, N),
        value=lambda x, p: _ln(x),
        derivatives=lambda x, p, n: [(-1) ** (i - 1) * factorial(i - 1) * x ** (-i) for i in range(1, n + 1)],
        mp=lambda p: mpmath.log,
        domain=lambda x, p: "logarithm needs x > 0" if x <= 0 else None,
        inverse=lambda x, p: _exp(x),
    )
)
register(
    CatalogEntry(
        name="sqrt",
        arity=(0, 0),
        composita=lambda x, p, N: sqrt_catalan(x, N),
        value=lambda x, p: _root(x, 2),
        derivatives=lambda x, p, n: _power_derivs(x, Fraction(1, 2), _root(x, 2), n),
        mp=lambda p: mpmath.sqrt,
        domain=lambda x, p: "square root needs x > 0" if x <= 0 else None,
        inverse=lambda x, p: x * x,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="rsqrt",
        arity=(0, 0),
        composita=lambda x, p, N: rsqrt(x, N),
        value=lambda x, p: 1 / _root(x, 2),
        derivatives=lambda x, p, n: _power_derivs(x, Fraction(-1, 2), 1 / _root(x, 2), n),
        mp=lambda p: (lambda t: 1 / mpmath.sqrt(t)),
        domain=lambda x, p: "square root needs x > 0" if x <= 0 else None,
        inverse=lambda x, p: 1 / (x * x),
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="cbrt",
        arity=(0, 0),
        composita=lambda x, p, N: cbrt(x, N),
        value=lambda x, p: _root(x, 3),
        derivatives=lambda x, p, n: _power_derivs(x, Fraction(1, 3), _root(x, 3), n),
        mp=lambda p: mpmath.cbrt,
        domain=lambda x, p: "cube root needs x > 0" if x <= 0 else None,
        inverse=lambda x, p: x**3,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="sin",
        arity=(0, 0),
        composita=lambda x, p, N: sin_entry(x, N),
        value=lambda x, p: _sin(x),
        derivatives=lambda x, p, n: _cycle([_cos(x), -_sin(x), -_cos(x), _sin(x)], n),
        mp=lambda p: mpmath.sin,
        inverse=_asin,
    )
)
register(
    CatalogEntry(
        name="cos",
        arity=(0, 0),
        composita=lambda x, p, N: cos_entry(x, N),
        value=lambda x, p: _cos(x),
        derivatives=lambda x, p, n: _cycle([-_sin(x), -_cos(x), _sin(x), _cos(x)], n),
        mp=lambda p: mpmath.cos,
        inverse=_acos,
    )
)
register(
    CatalogEntry(
        name="tan",
        arity=(0, 0),
        composita=lambda x, p, N: tan_entry(x, N),
        value=lambda x, p: _tan(x),
        derivatives=lambda x, p, n: taylor_derivatives(mpmath.tan, x, n),
        mp=lambda p: mpmath.tan,
        domain=lambda x, p: None if (_exact(x) and x == 0) or abs(math.cos(x)) > 1e-12 else "cos x = 0",
        inverse=_atan,
    )
)
register(
    CatalogEntry(
        name="arctan",
        arity=(0, 0),
        composita=lambda x, p, N: arctan_entry(x, N),
        value=_atan,
        derivatives=lambda x, p, n: taylor_derivatives(mpmath.atan, x, n),
        mp=lambda p: mpmath.atan,
        inverse=lambda x, p: _tan(x),
    )
)
register(
    CatalogEntry(
        name="exp",
        arity=(0, 0),
        composita=lambda x, p, N: exp_entry(x, N),
        value=lambda x, p: _exp(x),
        derivatives=lambda x, p, n: [_exp(x)] * n,
        mp=lambda p: mpmath.exp,
        inverse=lambda x, p: _ln(x),
    )
)
register(
    CatalogEntry(
        name="xexp",
        arity=(0, 0),
        composita=lambda x, p, N: x_exp_entry(x, N),
        value=lambda x, p: x * _exp(x),
        derivatives=lambda x, p, n: [(x + i) * _exp(x) for i in range(1, n + 1)],
        mp=lambda p: (lambda t: t * mpmath.exp(t)),
        inverse=_inverse_lambert,
    )
)
register(
    CatalogEntry(
        name="geom",
        arity=(0, 0),
        composita=lambda x, p, N: geometric(x, N),
        value=lambda x, p: 1 / (1 - x),
        derivatives=lambda x, p, n: [factorial(i) * (1 - x) ** (-i - 1) for i in range(1, n + 1)],
        mp=lambda p: (lambda t: 1 / (1 - t)),
        domain=lambda x, p: "pole at 1" if x == 1 else None,
        inverse=lambda x, p: 1 - 1 / x,
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="poly",
        arity=(1, 4),
        composita=lambda x, p, N: poly_entry(p, x, N),
        value=lambda x, p: _poly_value(p, x),
        derivatives=lambda x, p, n: _poly_derivs(p, x, n),
        mp=lambda p: (lambda t: sum(mpmath.mpf(c.numerator) / c.denominator * t**i for i, c in enumerate(p))),
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="bernoulli",
        arity=(0, 0),
        composita=lambda x, p, N: bernoulli_gf(x, N),
        value=_bernoulli_value,
        derivatives=lambda x, p, n: taylor_derivatives(lambda t: t / mpmath.expm1(t), x, n),
        mp=lambda p: (lambda t: t / mpmath.expm1(t)),
        domain=lambda x, p: "removable singularity at 0" if x == 0 else None,
    )
)
register(
    CatalogEntry(
        name="xsqrt",
        arity=(0, 0),
        composita=lambda x, p, N: x_over_sqrt_1mx2(x, N),
        value=_xsqrt_value,
        derivatives=lambda x, p, n: taylor_derivatives(lambda t: t / mpmath.sqrt(1 - t * t), x, n),
        mp=lambda p: (lambda t: t / mpmath.sqrt(1 - t * t)),
        domain=lambda x, p: None if -1 < x < 1 else "needs |x| < 1",
        inverse=lambda x, p: x / _root(1 + x * x, 2),
        algebraic=True,
    )
)
register(
    CatalogEntry(
        name="xlnx",
        arity=(0, 1),
        composita=lambda x, p, N: x_ln_x(x, _xlnx_a(p), N),
        value=lambda x, p: _xlnx_a(p) * x * _ln(x),
        derivatives=_xlnx_derivs,
        mp=lambda p: (lambda t: mpmath.mpf(_xlnx_a(p).numerator) / _xlnx_a(p).denominator * t * mpmath.log(t)),
        domain=lambda x, p: "logarithm needs x > 0" if x <= 0 else None,
    )
)


@beartype
def get(name: str) -> CatalogEntry:
    entry = CATALOG.get(name)
    if entry is None:
        raise UnknownAtomError(name)
    return entry


def names() -> List[str]:
    return sorted(CATALOG)


@beartype
def oracle_composita(name: str, x: Point, params: Params = (), order: int = constants.DEFAULT_ORDER) -> Composita:
    """from_series of the entry's derivative oracle at x."""
    entry = get(name)
    return from_series(Series.from_derivatives(entry.derivatives_at(x, params, order)))
