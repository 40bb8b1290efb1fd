from compositae.bellpoly import (
    BellTriangle,
    bell_bruteforce,
    bell_generic,
    chain_derivatives,
    enumerate_compositions,
    faa_di_bruno,
)
from compositae.catalog import CATALOG, CatalogEntry
from compositae.composita import (
    Composita,
    PowerCoeffs,
    add,
    bell_triangle,
    close,
    compose,
    compose_power_coeffs,
    delta_check,
    from_power_coeffs,
    from_series,
    identity,
    invert_backward,
    invert_forward,
    power_coeffs,
    product,
    to_bell,
)
from compositae.conformance import ConformanceRecord, ConformanceReport, run_suite
from compositae.errors import *
from compositae.funcexpr import Atom, Comp, Inv, Prod, Sum, build, derivatives, evaluate, parse, print_expr
from compositae.mpoly import MPoly
from compositae.ring import FLOAT, POLYNOMIAL, RATIONAL
from compositae.series import Series
