from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from beartype.roar import BeartypeCallHintParamViolation
from compositae.exact import (
    CombTables,
    bell_number,
    binomial,
    catalan,
    factorial,
    falling_factorial,
    integer_root,
    lah,
    multinomial,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)


def test_factorial():
    assert factorial(0) == 1
    assert factorial(10) == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_factorial_must_be_int():
    with pytest.raises(BeartypeCallHintParamViolation):
        factorial("3")


def test_binomial_generalized_upper_index():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(5, -1) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3


def test_stirling_first_kind_signs():
    assert [stirling1_signed(4, k) for k in range(5)] == [0, -6, 11, -6, 1], "Test failed"
    assert stirling1_unsigned(4, 1) == 6
    assert stirling1_signed(3, 4) == 0


def test_stirling_second_kind():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1], "Test failed"
    assert stirling2(0, 0) == 1


def test_stirling_matrices_are_inverse():
    for n in range(1, 9):
        for k in range(1, n + 1):
            s = sum(stirling2(n, j) * stirling1_signed(j, k) for j in range(k, n + 1))
            assert s == (1 if n == k else 0)


def test_catalan_lah_bell():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert lah(4, 2) == 36
    assert lah(0, 0) == 1
    assert [bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_multinomial():
    assert multinomial(4, [2, 1, 1]) == 12
    with pytest.raises(ValueError):
        multinomial(4, [2, 1])


def test_falling_factorial_rational():
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(5, 0) == 1


def test_integer_root():
    assert integer_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert integer_root(9, 2) == 3
    assert integer_root(0, 2) == 0
    assert integer_root(2, 2) is None
    assert integer_root(Fraction(1, 3), 2) is None


def test_tables_grow_consistently_under_concurrency():
    tables = CombTables()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda n: tables.stirling2(n, n // 2), range(40, 0, -1)))
    assert results == [stirling2(n, n // 2) for n in range(40, 0, -1)], "Test failed"
    with ThreadPoolExecutor(max_workers=8) as pool:
        facts = list(pool.map(tables.factorial, range(60)))
    assert facts == [factorial(n) for n in range(60)]
