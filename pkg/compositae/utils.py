import math
import re
from fractions import Fraction

from beartype import beartype
from beartype.typing import Union

from compositae import constants
from compositae.mpoly import MPoly

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$")


@beartype
def parse_point(text: str) -> Union[Fraction, float]:
    """'3', '-3/2' -> exact Fraction; '0.7', '1e-3', 'pi/3' -> float."""
    m = _RATIONAL_RE.match(text)
    if m:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in point: {text}")
        return Fraction(int(num), int(den) if den else 1)
    if _DECIMAL_RE.match(text):
        return float(text)
    named = _named_constant(text)
    if named is not None:
        return named
    raise ValueError(f"not a point: {text}")


def _named_constant(text: str):
    # pi, e, and simple multiples or fractions of pi like 'pi/3' or '2*pi'
    t = text.replace(" ", "")
    m = re.match(r"^([+-]?\d+\*)?(pi|e)(/\d+)?$", t)
    if not m:
        return None
    coeff, name, div = m.groups()
    value = math.pi if name == "pi" else math.e
    if coeff:
        value *= int(coeff[:-1])
    if div:
        value /= int(div[1:])
    return value


@beartype
def parse_param(text: str) -> Fraction:
    """Integer or decimal literal as an exact Fraction ('0.25' -> 1/4)."""
    if not re.match(r"^[+-]?(\d+(\.\d*)?|\.\d+)$", text):
        raise ValueError(f"not a number: {text}")
    return Fraction(text)


def format_decimal(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        return str(v)
    if v == 0:
        v = 0.0
    return format(v, f".{constants.DECIMAL_DIGITS}g")


def format_param(p: Fraction) -> str:
    """Shortest exact decimal for a parameter parsed from a decimal literal."""
    if p.denominator == 1:
        return str(p.numerator)
    den = p.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{p} has no finite decimal expansion")
    digits = max(twos, fives)
    scaled = p * 10**digits
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}".rstrip("0").rstrip(".")


def format_value(v) -> str:
    """Exact values as 'p/q' strings, floats with 15 significant digits, polynomials as text."""
    if isinstance(v, MPoly):
        return str(v)
    if isinstance(v, bool):
        raise TypeError("booleans are not values")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    return format_decimal(float(v))
