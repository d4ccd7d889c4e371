from fractions import Fraction

import pytest
import sympy as sp
from sympy import Poly

from hodgekit.core.exact import as_int, binomial, to_json_number
from hodgekit.core.series import (
    TruncSeries,
    geometric_quotient_series,
    series_coefficient,
    truncate_total_degree,
    truncated_inverse,
)


@pytest.mark.parametrize("n, k, expected", [(6, 3, 20), (6, 7, 0), (9, 4, 126), (5, -1, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_symmetry_and_vandermonde():
    for n in range(12):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
    # C(m+n, k) = sum_j C(m, j) C(n, k-j)
    for m, n, k in [(3, 4, 5), (6, 2, 4), (7, 7, 7)]:
        assert binomial(m + n, k) == sum(binomial(m, j) * binomial(n, k - j) for j in range(k + 1))


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_exact_helpers():
    assert as_int(Fraction(6, 3)) == 2
    with pytest.raises(ValueError):
        as_int(Fraction(1, 2))
    assert to_json_number(Fraction(4, 2)) == 2
    assert to_json_number(Fraction(-3, 6)) == "-1/2"


def test_six_fold_convolution():
    s = geometric_quotient_series([3] * 6, [1] * 6, 12)
    assert s.integer_coefficients() == [1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1]
    assert series_coefficient(geometric_quotient_series([3] * 6, [1] * 6, 4), 4) == 90


def test_geometric_series():
    assert geometric_quotient_series([], [1], 3).integer_coefficients() == [1, 1, 1, 1]
    assert geometric_quotient_series([4], [2], 4).integer_coefficients() == [1, 0, 1, 0, 0]


def test_quotient_with_equal_exponents_is_one():
    s = geometric_quotient_series([2, 5, 3], [3, 2, 5], 10)
    assert s.integer_coefficients() == [1] + [0] * 10


def test_quotient_rejects_nonpositive_exponents():
    with pytest.raises(ValueError):
        geometric_quotient_series([2], [0], 3)
    with pytest.raises(ValueError):
        geometric_quotient_series([-1], [1], 3)


@pytest.mark.parametrize("count", range(1, 9))
@pytest.mark.parametrize("c", range(1, 9))
def test_palindromy(count, c):
    top = count * (c - 1)
    s = geometric_quotient_series([c] * count, [1] * count, top)
    assert s.is_palindromic(top)


def test_series_coefficient_examples():
    binom5 = TruncSeries.polynomial([1, 1], 5) ** 5
    assert series_coefficient(binom5, 4) == 5
    assert series_coefficient(TruncSeries.polynomial([1, 1, 1], 6) ** 6, 6) == 141
    assert series_coefficient(TruncSeries.polynomial([1, 1, 1], 2) ** 4, 2) == 10


def test_coefficient_beyond_order_is_an_error():
    s = TruncSeries.one(3)
    with pytest.raises(IndexError):
        series_coefficient(s, 4)


def test_inverse_and_division():
    s = TruncSeries.polynomial([2, -3, 5, 7], 6)
    product = s * s.inverse()
    assert [series_coefficient(product, k) for k in range(7)] == [1] + [0] * 6
    assert (s / s).coefficients == TruncSeries.one(6).coefficients
    with pytest.raises(ZeroDivisionError):
        TruncSeries.polynomial([0, 1], 3).inverse()


def test_rational_arithmetic_stays_exact():
    s = TruncSeries.polynomial([3, 1], 4).inverse()
    assert s.coefficient(1) == Fraction(-1, 9)
    assert s.coefficient(4) == Fraction(1, 243)
    with pytest.raises(ValueError):
        s.integer_coefficients()


def test_mixed_orders_truncate_to_the_smaller():
    a = TruncSeries.polynomial([1, 1], 5)
    b = TruncSeries.polynomial([1, 2, 3], 2)
    assert (a * b).order == 2
    assert (a + 1).coefficient(0) == 2
    assert (2 - a).coefficients[:2] == (1, -1)


def test_truncate_total_degree():
    a, b = sp.symbols("a b")
    poly = Poly(1 + a + a * b + a ** 3 + b ** 2 * a, a, b)
    assert truncate_total_degree(poly, 2) == Poly(1 + a + a * b, a, b)
    assert truncate_total_degree(Poly(a ** 2, a, b), 1).is_zero


def test_truncated_inverse():
    a, b = sp.symbols("a b")
    geometric = truncated_inverse(Poly(1 - a * b, a, b), 4)
    assert geometric == Poly(1 + a * b + a ** 2 * b ** 2, a, b)
    outer = Poly((1 + a) * (1 + b), a, b)
    product = truncate_total_degree(outer * truncated_inverse(outer, 5), 5)
    assert product == Poly(1, a, b)
    assert truncated_inverse(Poly(-1 + a, a, b), 3) == Poly(-1 - a - a ** 2 - a ** 3, a, b)
    with pytest.raises(ValueError):
        truncated_inverse(Poly(2 + a, a, b), 3)
