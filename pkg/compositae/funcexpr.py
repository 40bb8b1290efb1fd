"""A small expression language over catalog atoms.

    expr := atom | "sum(" expr "," expr ")" | "prod(" expr "," expr ")"
          | "comp(" expr "," expr ")" | "inv(" expr ")"
    atom := identifier (":" number)*

`comp(g, f)` is g(f(x)); `inv(f)` is the compositional inverse of f,
evaluated at the point given to `build`.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from beartype import beartype
from beartype.typing import Callable, List, Optional, Tuple, Union

from compositae import catalog, constants
from compositae.catalog import Point, Value, as_point
from compositae.composita import (
    Composita,
    add,
    compose,
    from_series,
    invert_forward,
    power_coeffs,
    product,
)
from compositae.errors import (
    ArityError,
    DomainError,
    ExprSyntaxError,
    ExprTooLargeError,
)
from compositae.exact import factorial
from compositae.series import Series
from compositae.utils import format_param, parse_param


@dataclass(frozen=True)
class Atom:
    name: str
    params: Tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class Sum:
    left: "FuncExpr"
    right: "FuncExpr"


@dataclass(frozen=True)
class Prod:
    left: "FuncExpr"
    right: "FuncExpr"


@dataclass(frozen=True)
class Comp:
    outer: "FuncExpr"
    inner: "FuncExpr"


@dataclass(frozen=True)
class Inv:
    inner: "FuncExpr"


FuncExpr = Union[Atom, Sum, Prod, Comp, Inv]

_COMBINATORS = {"sum": Sum, "prod": Prod, "comp": Comp, "inv": Inv}

_IDENT_RE = re.compile(r"[a-z_][a-z0-9_]*")
_NUMBER_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)")
_SPACE_RE = re.compile(r"\s*")


def node_count(e: FuncExpr) -> int:
    if isinstance(e, Atom):
        return 1
    if isinstance(e, Inv):
        return 1 + node_count(e.inner)
    if isinstance(e, Comp):
        return 1 + node_count(e.outer) + node_count(e.inner)
    return 1 + node_count(e.left) + node_count(e.right)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.nodes = 0

    def offset(self, pos: Optional[int] = None) -> int:
        # byte offset into the UTF-8 encoding
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def error(self, message: str, pos: Optional[int] = None):
        return ExprSyntaxError(message, self.offset(pos))

    def skip_space(self):
        self.pos = _SPACE_RE.match(self.text, self.pos).end()

    def expect(self, ch: str):
        self.skip_space()
        if not self.text.startswith(ch, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected '{ch}', found '{found}'")
        self.pos += len(ch)

    def identifier(self) -> Tuple[str, int]:
        self.skip_space()
        m = _IDENT_RE.match(self.text, self.pos)
        if not m:
            if self.pos >= len(self.text):
                raise self.error("unexpected end of input")
            raise self.error(f"unexpected character '{self.text[self.pos]}'")
        start = self.pos
        self.pos = m.end()
        return m.group(), start

    def count(self):
        self.nodes += 1
        if self.nodes > constants.MAX_EXPR_NODES:
            raise ExprTooLargeError(self.nodes, constants.MAX_EXPR_NODES)

    def expr(self) -> FuncExpr:
        name, start = self.identifier()
        self.count()
        self.skip_space()
        combinator = _COMBINATORS.get(name)
        if combinator is not None and self.text.startswith("(", self.pos):
            self.pos += 1
            if combinator is Inv:
                inner = self.expr()
                self.expect(")")
                return Inv(inner)
            first = self.expr()
            self.expect(",")
            second = self.expr()
            self.expect(")")
            return combinator(first, second)
        return self.atom(name, start)

    def atom(self, name: str, start: int) -> Atom:
        entry = catalog.get(name)
        params = []
        while True:
            self.skip_space()
            if not self.text.startswith(":", self.pos):
                break
            self.pos += 1
            self.skip_space()
            m = _NUMBER_RE.match(self.text, self.pos)
            if not m:
                raise self.error("expected a number after ':'")
            params.append(parse_param(m.group()))
            self.pos = m.end()
        lo, hi = entry.arity
        if not lo <= len(params) <= hi:
            raise ArityError(name, len(params), str(lo) if lo == hi else f"{lo} to {hi}")
        return Atom(name, tuple(params))


@beartype
def parse(text: str) -> FuncExpr:
    p = _Parser(text)
    e = p.expr()
    p.skip_space()
    if p.pos != len(text):
        raise p.error(f"unexpected trailing input '{text[p.pos:]}'")
    logging.debug(f"parsed {print_expr(e)} ({p.nodes} nodes)")
    return e


def print_expr(e: FuncExpr) -> str:
    if isinstance(e, Atom):
        return e.name + "".join(f":{format_param(p)}" for p in e.params)
    if isinstance(e, Inv):
        return f"inv({print_expr(e.inner)})"
    if isinstance(e, Comp):
        return f"comp({print_expr(e.outer)}, {print_expr(e.inner)})"
    name = "sum" if isinstance(e, Sum) else "prod"
    return f"{name}({print_expr(e.left)}, {print_expr(e.right)})"


# evaluation


def _inverse_value(e: Inv, x: Value) -> Value:
    """y with f(y) = x for f = e.inner."""
    inner = e.inner
    if isinstance(inner, Inv):
        return evaluate(inner.inner, x)
    if isinstance(inner, Atom):
        entry = catalog.get(inner.name)
        if entry.inverse is not None:
            return entry.inverse(x, inner.params)
    f = mp_function(inner, x)
    with mpmath.workdps(constants.ORACLE_DPS):
        root = mpmath.findroot(lambda s: f(s) - catalog.to_mpf(x), catalog.to_mpf(x))
        return float(root)


def _guard(name: str, x, fn: Callable):
    try:
        return fn()
    except (ValueError, ZeroDivisionError, OverflowError) as e:
        raise DomainError(name, x, str(e)) from e


def _build(e: FuncExpr, x: Value, order: int) -> Tuple[Value, Composita]:
    if isinstance(e, Atom):
        entry = catalog.get(e.name)
        value = _guard(e.name, x, lambda: entry.value_at(x, e.params))
        return value, _guard(e.name, x, lambda: entry.build(x, e.params, order))
    if isinstance(e, Sum):
        va, a = _build(e.left, x, order)
        vb, b = _build(e.right, x, order)
        return va + vb, add(a, b)
    if isinstance(e, Prod):
        va, a = _build(e.left, x, order)
        vb, b = _build(e.right, x, order)
        return va * vb, product(power_coeffs(a, va), power_coeffs(b, vb))
    if isinstance(e, Comp):
        vf, inner = _build(e.inner, x, order)
        vg, outer = _build(e.outer, vf, order)
        return vg, compose(inner, outer)
    y = _guard(print_expr(e), x, lambda: _inverse_value(e, x))
    _, f = _build(e.inner, y, order)
    logging.debug(f"inverting {print_expr(e.inner)} at {y}")
    return y, invert_forward(f)


@beartype
def build(e: FuncExpr, x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """Composita of the function `e` denotes, shifted to the point x."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return _build(e, as_point(x), order)[1]


@beartype
def evaluate(e: FuncExpr, x: Point) -> Value:
    x = as_point(x)
    if isinstance(e, Atom):
        entry = catalog.get(e.name)
        return _guard(e.name, x, lambda: entry.value_at(x, e.params))
    if isinstance(e, Sum):
        return evaluate(e.left, x) + evaluate(e.right, x)
    if isinstance(e, Prod):
        return evaluate(e.left, x) * evaluate(e.right, x)
    if isinstance(e, Comp):
        return evaluate(e.outer, evaluate(e.inner, x))
    return _guard(print_expr(e), x, lambda: _inverse_value(e, x))


@beartype
def derivatives(e: FuncExpr, x: Point, n: int) -> List[Value]:
    """y'(x), ..., y^(n)(x) as n! Y(n, 1)."""
    c = build(e, x, n)
    return [c[i, 1] * factorial(i) for i in range(1, n + 1)]


def mp_function(e: FuncExpr, x: Value) -> Callable:
    """mpmath callable for `e`, valid near x (inverse branches are chosen at x)."""
    if isinstance(e, Atom):
        return catalog.get(e.name).mp(e.params)
    if isinstance(e, Sum):
        f, g = mp_function(e.left, x), mp_function(e.right, x)
        return lambda t: f(t) + g(t)
    if isinstance(e, Prod):
        f, g = mp_function(e.left, x), mp_function(e.right, x)
        return lambda t: f(t) * g(t)
    if isinstance(e, Comp):
        f = mp_function(e.inner, x)
        g = mp_function(e.outer, evaluate(e.inner, x))
        return lambda t: g(f(t))
    y0 = catalog.to_mpf(evaluate(e, x))
    f = mp_function(e.inner, evaluate(e, x))
    return lambda t: mpmath.findroot(lambda s: f(s) - t, y0)


@beartype
def oracle_composita(e: FuncExpr, x: Point, order: int = constants.DEFAULT_ORDER) -> Composita:
    """from_series of the mpmath Taylor expansion of `e` at x."""
    x = as_point(x)
    fn = mp_function(e, x)
    derivs = _guard(print_expr(e), x, lambda: catalog.taylor_derivatives(fn, x, order))
    return from_series(Series.from_derivatives(derivs))
