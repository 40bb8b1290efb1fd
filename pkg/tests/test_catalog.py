import math
from fractions import Fraction

import pytest
from beartype.roar import BeartypeCallHintParamViolation
from compositae import catalog
from compositae.catalog import (
    CATALOG,
    arctan_entry,
    bernoulli_gf,
    cbrt,
    compose,
    cubic,
    exp_entry,
    fibonacci_gf,
    geometric,
    lambert_w_derivs,
    lambert_w_derivs_recurrence,
    log_shift,
    neg_pow_m,
    oracle_composita,
    poly_entry,
    pow_m,
    quad,
    recip,
    recip_ln,
    rsqrt,
    sqrt_catalan,
    square_plus_ln,
    tan_entry,
    x_exp_entry,
    x_ln_x,
    x_over_sqrt_1mx2,
    x_pow_ax,
)
from compositae.composita import add, bell_triangle, close, from_series
from compositae.errors import ArityError, DomainError, UnknownAtomError
from compositae.series import Series


def test_cubic_matches_series():
    a, b, c = Fraction(2), Fraction(-1), Fraction(1, 3)
    assert cubic(a, b, c, 7) == from_series(Series([0, a, b, c, 0, 0, 0, 0]))


def test_cubic_bell_rows_at_one():
    rows = bell_triangle(poly_entry([0, 2, 0, 1], 1, 4))
    assert rows[0] == [5]
    assert rows[2] == [6, 90, 125], "Test failed"
    assert rows[3] == [0, 228, 900, 625], "Test failed"


@pytest.mark.parametrize(
    "name, params, x",
    [
        ("identity", (), Fraction(5)),
        ("pow", (Fraction(3),), Fraction(-2, 3)),
        ("pow", (Fraction(1),), Fraction(4)),
        ("negpow", (Fraction(2),), Fraction(3, 2)),
        ("recip", (), Fraction(-3)),
        ("ln", (), Fraction(2)),
        ("sqrt", (), Fraction(4)),
        ("sqrt", (), Fraction(9, 4)),
        ("rsqrt", (), Fraction(4)),
        ("cbrt", (), Fraction(8)),
        ("cbrt", (), Fraction(27, 8)),
        ("sin", (), Fraction(0)),
        ("cos", (), Fraction(0)),
        ("exp", (), Fraction(0)),
        ("xexp", (), Fraction(0)),
        ("geom", (), Fraction(1, 3)),
        ("poly", (Fraction(1), Fraction(-2), Fraction(0), Fraction(5)), Fraction(1, 2)),
        ("xlnx", (Fraction(3),), Fraction(1)),
    ],
)
def test_exact_entries_equal_their_oracle(name, params, x):
    entry = CATALOG[name]
    got = entry.build(x, params, 8)
    assert got == oracle_composita(name, x, params, 8)
    assert got.ring.exact


@pytest.mark.parametrize(
    "name, params, x",
    [
        ("ln", (), 0.3),
        ("sqrt", (), Fraction(2)),
        ("rsqrt", (), 1.7),
        ("cbrt", (), Fraction(5)),
        ("sin", (), 0.7),
        ("cos", (), -2.0),
        ("tan", (), Fraction(0)),
        ("tan", (), 0.4),
        ("arctan", (), Fraction(1)),
        ("exp", (), 0.5),
        ("xexp", (), Fraction(1)),
        ("bernoulli", (), Fraction(1)),
        ("xsqrt", (), Fraction(0)),
        ("xsqrt", (), Fraction(3, 5)),
        ("xsqrt", (), Fraction(-3, 5)),
        ("xlnx", (), Fraction(2)),
    ],
)
def test_float_entries_close_to_their_oracle(name, params, x):
    entry = CATALOG[name]
    assert close(entry.build(x, params, 6), oracle_composita(name, x, params, 6))


def test_power_closed_forms():
    x = Fraction(3, 2)
    assert pow_m(x, 2, 4) == quad(2 * x, 1, 4)
    assert pow_m(x, 4, 6) == from_series(Series([0, 4 * x**3, 6 * x**2, 4 * x, 1, 0, 0]))
    assert recip(x, 5) == neg_pow_m(x, 1, 5)
    assert geometric(Fraction(0), 3).rows() == [[1], [1, 1], [1, 2, 1]]


def test_log_shift_uses_signed_stirling():
    c = log_shift(Fraction(2), 3)
    assert c[1, 1] == Fraction(1, 2)
    assert c[2, 1] == Fraction(-1, 8)
    assert c[3, 1] == Fraction(1, 24)


def test_root_entries_at_perfect_powers():
    assert sqrt_catalan(Fraction(4), 3)[1, 1] == Fraction(1, 4)
    assert rsqrt(Fraction(4), 3)[1, 1] == Fraction(-1, 16)
    assert cbrt(Fraction(8), 3)[1, 1] == Fraction(1, 12)


def test_root_literal_forms_disagree_with_oracle():
    x = Fraction(4)
    assert sqrt_catalan(x, 5, literal=True)[1, 1] == 1
    assert sqrt_catalan(x, 5, literal=True) != oracle_composita("sqrt", x, (), 5)
    assert rsqrt(x, 5, literal=True) != oracle_composita("rsqrt", x, (), 5)
    assert cbrt(Fraction(8), 5, literal=True) != oracle_composita("cbrt", Fraction(8), (), 5)


def test_sin_bell_rows_at_zero():
    rows = bell_triangle(catalog.sin_entry(Fraction(0), 5))
    assert rows[3] == [0, -4, 0, 1], "Test failed"
    assert rows[4] == [1, 0, -10, 0, 1], "Test failed"


def test_sin_bell_rows_at_float_point(rows_close):
    x = 0.7
    s, c = math.sin(x), math.cos(x)
    rows = bell_triangle(catalog.sin_entry(x, 5))
    rows_close(
        [[s, 3 * s**2 - 4 * c**2, -6 * c**2 * s, c**4], [c, 15 * c * s, 15 * c * s**2 - 10 * c**3, -10 * c**3 * s, c**5]],
        rows[3:],
    )


def test_tan_bell_rows_at_zero():
    rows = bell_triangle(tan_entry(Fraction(0), 4))
    assert rows == [[1], [0, 1], [2, 0, 1], [0, 8, 0, 1]], "Test failed"


def test_arctan_at_one():
    rows = bell_triangle(arctan_entry(Fraction(1), 3))
    assert rows[0] == [Fraction(1, 2)]
    assert rows[1] == [Fraction(-1, 2), Fraction(1, 4)]
    # 6(x^2/(x^2+1)^3 - 1/(3(x^2+1)^3)) at 1
    assert rows[2][0] == Fraction(1, 2)


def test_fibonacci_closed_form_is_a_composition():
    x = Fraction(1, 4)
    expected = compose(quad(2 * x + 1, 1, 4), geometric(x + x * x, 4))
    assert fibonacci_gf(x, 4) == expected


def test_square_plus_ln_matches_sum_theorem():
    x = Fraction(2)
    assert square_plus_ln(x, 6) == add(quad(2 * x, 1, 6), log_shift(x, 6))


def test_exp_entry_at_zero_is_stirling2():
    c = exp_entry(Fraction(0), 4)
    assert bell_triangle(c)[3] == [1, 7, 6, 1]


def test_x_exp_literal_table_only_matches_at_zero():
    assert x_exp_entry(Fraction(0), 5, literal=True) == x_exp_entry(Fraction(0), 5)
    assert not close(x_exp_entry(Fraction(1), 5, literal=True), x_exp_entry(Fraction(1), 5))


def test_lambert_derivatives_at_zero():
    assert lambert_w_derivs(5, Fraction(0)) == [1, -2, 9, -64, 625], "Test failed"
    assert lambert_w_derivs_recurrence(5, Fraction(0)) == [1, -2, 9, -64, 625]


def test_lambert_derivatives_at_one():
    x = 1.0
    e = math.exp(-x)
    got = lambert_w_derivs(3, x)
    assert got[0] == pytest.approx(e / 2, rel=1e-12)
    assert got[1] == pytest.approx(-3 * e**2 / 8, rel=1e-12)
    assert got[2] == pytest.approx(19 * e**3 / 32, rel=1e-12)
    assert lambert_w_derivs_recurrence(3, x) == pytest.approx(got, rel=1e-12)


def test_lambert_domain():
    with pytest.raises(DomainError):
        lambert_w_derivs(3, Fraction(-1))


def test_x_ln_x_rows_at_one():
    c = x_ln_x(Fraction(1), 1, 4)
    assert c.rows() == [
        [1],
        [Fraction(1, 2), 1],
        [Fraction(-1, 6), 1, 1],
        [Fraction(1, 12), Fraction(-1, 12), Fraction(3, 2), 1],
    ], "Test failed"
    assert x_ln_x(Fraction(1), 3, 2).rows() == [[3], [Fraction(3, 2), 9]]


def test_x_pow_x_derivatives_at_one():
    assert x_pow_ax(Fraction(1), 1, 5) == [1, 2, 3, 8, 10]


def test_recip_ln_literal_exponent_is_wrong():
    x = Fraction(3)
    want = oracle_composita("ln", x, (), 5)
    want = compose(want, recip(math.log(3), 5))
    assert close(recip_ln(x, 5), want)
    assert not close(recip_ln(x, 5, literal=True), want)


def test_bernoulli_at_one():
    c = bernoulli_gf(Fraction(1), 4)
    # f'(1) for x/(e^x - 1)
    e = math.e
    assert c[1, 1] == pytest.approx((e - 1 - e) / (e - 1) ** 2, rel=1e-12)


@pytest.mark.parametrize("x", [Fraction(1), 0.3, Fraction(-2)])
def test_bernoulli_matches_oracle_below_the_diagonal(x):
    want = oracle_composita("bernoulli", x, (), 6)
    assert close(bernoulli_gf(x, 6), want, 1e-8)
    assert not close(bernoulli_gf(x, 6, literal=True), want, 1e-8)


def test_bernoulli_literal_sum_agrees_on_the_diagonal():
    x = Fraction(1)
    lit = bernoulli_gf(x, 4, literal=True)
    cor = bernoulli_gf(x, 4)
    assert lit[1, 1] == pytest.approx(cor[1, 1], rel=1e-12)


def test_x_over_sqrt_parity():
    pos = x_over_sqrt_1mx2(Fraction(1, 2), 5)
    neg = x_over_sqrt_1mx2(Fraction(-1, 2), 5)
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert neg[n, k] == pytest.approx((-1) ** (n + k) * pos[n, k], rel=1e-12, abs=1e-12)


def test_x_over_sqrt_exact_at_rational_root():
    x = Fraction(3, 5)
    c = x_over_sqrt_1mx2(x, 6)
    assert c.ring.exact
    assert close(c, oracle_composita("xsqrt", x, (), 6))


@pytest.mark.parametrize("x", [Fraction(1, 20), 0.01, -0.001, Fraction(-1, 6)])
def test_x_over_sqrt_near_zero(x):
    assert close(x_over_sqrt_1mx2(x, 8), oracle_composita("xsqrt", x, (), 8), 1e-9)


def test_x_over_sqrt_eighth_derivative_at_one_hundredth():
    c = x_over_sqrt_1mx2(Fraction(1, 100), 8)
    assert math.factorial(8) * c[8, 1] == pytest.approx(993.888, rel=1e-5)


def test_domain_errors():
    with pytest.raises(DomainError):
        log_shift(Fraction(0))
    with pytest.raises(DomainError):
        recip(0)
    with pytest.raises(DomainError):
        pow_m(Fraction(2), Fraction(1, 2))
    with pytest.raises(DomainError) as e:
        CATALOG["sqrt"].build(Fraction(-1))
    assert e.value.atom == "sqrt"
    with pytest.raises(DomainError):
        CATALOG["tan"].build(math.pi / 2)


def test_registry_lookup():
    assert catalog.get("sin") is CATALOG["sin"]
    assert "xlnx" in catalog.names()
    with pytest.raises(UnknownAtomError):
        catalog.get("cot")
    with pytest.raises(ArityError):
        CATALOG["pow"].build(Fraction(2))
    with pytest.raises(ArityError):
        CATALOG["poly"].build(Fraction(2), tuple(Fraction(1) for _ in range(5)))


def test_value_and_inverse():
    assert CATALOG["sqrt"].value_at(Fraction(9, 4)) == Fraction(3, 2)
    assert CATALOG["pow"].inverse(Fraction(27), (Fraction(3),)) == 3
    assert CATALOG["xexp"].inverse(Fraction(0), ()) == 0


def test_closed_forms_type_check_points():
    with pytest.raises(BeartypeCallHintParamViolation):
        recip("2")


@pytest.mark.parametrize("entry", [catalog.sin_entry, catalog.cos_entry])
@pytest.mark.parametrize("x", [0.0, 0.7, -1.3, math.pi / 3, 2.5])
@pytest.mark.parametrize("order", [1, 4, 8])
def test_trig_shift_by_pi_flips_odd_columns(entry, x, order):
    shifted = entry(x + math.pi, order)
    base = entry(x, order)
    assert close(shifted, base.scale(-1))
    for n in range(1, order + 1):
        for k in range(1, n + 1):
            assert shifted[n, k] == pytest.approx((-1) ** k * base[n, k], abs=1e-9)
