import logging
from fractions import Fraction
from numbers import Number

from beartype import beartype
from beartype.typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from compositae.errors import UnboundIndeterminateError

Exponents = Tuple[int, ...]


def _trim(exponents: Iterable[int]) -> Exponents:
    e = list(exponents)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exponents(a: Exponents, b: Exponents) -> Exponents:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _grlex_key(exponents: Exponents):
    # higher total degree first, then y1 before y2 before ...
    return (-sum(exponents), tuple(-e for e in exponents))


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class MPoly:
    """Sparse polynomial over the rationals in y1, y2, ...

    Terms are stored as {exponent vector: coefficient}; exponent vectors are
    trimmed of trailing zeros and zero coefficients are never stored, so two
    equal polynomials always have identical terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Union[int, Fraction]] = None):
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            for exponents, c in terms.items():
                if any(e < 0 for e in exponents):
                    raise ValueError(f"negative exponent in {exponents}")
                key = _trim(exponents)
                value = clean.get(key, Fraction(0)) + Fraction(c)
                if value:
                    clean[key] = value
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c) -> "MPoly":
        return cls({(): c})

    @classmethod
    def var(cls, index: int, power: int = 1) -> "MPoly":
        if index < 1:
            raise ValueError(f"indeterminates are numbered from 1, got {index}")
        exponents = [0] * index
        exponents[index - 1] = power
        return cls({tuple(exponents): 1})

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def one(cls) -> "MPoly":
        return cls.constant(1)

    # terms
    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficients(self):
        return list(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(len(e) == 0 for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def indeterminates(self):
        return sorted({i + 1 for e in self._terms for i, p in enumerate(e) if p})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exponents(e1, e2)
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("division by a non-constant or zero polynomial")
            other = other.constant_term()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return MPoly({e: c / other for e, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution and evaluation
    @beartype
    def substitute(self, assignment: Mapping[int, Union[int, Fraction, "MPoly"]]) -> "MPoly":
        """Simultaneously replace y_i by assignment[i].

        Indeterminates without an entry are left in place."""
        result = MPoly()
        for exponents, c in self._terms.items():
            term = MPoly.constant(c)
            for i, p in enumerate(exponents):
                if not p:
                    continue
                value = assignment.get(i + 1)
                if value is None:
                    term = term * MPoly.var(i + 1, p)
                else:
                    term = term * (MPoly.constant(value) if not isinstance(value, MPoly) else value) ** p
            result = result + term
        logging.debug(f"substitute: {len(self._terms)} terms -> {len(result._terms)} terms")
        return result

    def evaluate(self, point: Union[Mapping[int, Number], Sequence[Number]]):
        """Value at the given point: a mapping {i: y_i} or a sequence (y1, y2, ...).

        Exact over rationals; a float anywhere makes the result a float."""
        if not isinstance(point, Mapping):
            point = {i + 1: v for i, v in enumerate(point)}
        total = Fraction(0)
        for exponents, c in self._terms.items():
            term = c
            for i, p in enumerate(exponents):
                if not p:
                    continue
                if i + 1 not in point:
                    raise UnboundIndeterminateError(i + 1)
                term = term * point[i + 1] ** p
            total = total + term
        return total

    # printing
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exponents in sorted(self._terms, key=_grlex_key):
            c = self._terms[exponents]
            factors = []
            for i, p in enumerate(exponents):
                if p == 1:
                    factors.append(f"y{i + 1}")
                elif p > 1:
                    factors.append(f"y{i + 1}^{p}")
            monomial = "*".join(factors)
            if not monomial:
                text = _format_coefficient(c)
            elif c == 1:
                text = monomial
            elif c == -1:
                text = "-" + monomial
            else:
                text = f"{_format_coefficient(c)}*{monomial}"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MPoly({self})"
