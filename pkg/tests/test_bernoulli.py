from fractions import Fraction as F

import pytest

from degenbernstein.algebra import LAM, ONE, X, bipoly_eval, series_mul, series_pow, series_invert
from degenbernstein.bernoulli import (
    bernoulli_series,
    degen_bernoulli,
    degen_bernoulli_row,
    quotient_series,
)
from degenbernstein.combinatorics import degen_falling_factorial
from degenbernstein.algebra import binomial_series
from degenbernstein.errors import TruncationError

from oracles import (
    bernoulli_numbers,
    classical_higher_bernoulli,
    sympy_degen_bernoulli,
    x_coefficients,
)


def test_constant_term():
    for k in range(4):
        assert degen_bernoulli(0, k) == 1


def test_order_zero_is_degenerate_falling():
    for n in range(7):
        assert degen_bernoulli(n, 0) == degen_falling_factorial(X, n)


def test_first_coefficient():
    assert degen_bernoulli(1, 1, F(0)) == (LAM - 1) / 2


def test_classical_limit_numbers():
    b = bernoulli_numbers(10)
    assert b[:5] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    for n in range(11):
        assert degen_bernoulli(n, 1, F(0), F(0)) == b[n]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_classical_limit_polynomials(k):
    for n in range(9):
        p = degen_bernoulli(n, k).substitute(lam=F(0))
        for xv in (F(0), F(1, 3), F(-2)):
            assert p.substitute(x=xv) == classical_higher_bernoulli(n, k, xv)


@pytest.mark.parametrize("lam", [F(1, 3), F(-2, 5), F(3, 2)])
def test_matches_sympy_series(lam):
    expected = sympy_degen_bernoulli(6, 1, lam)
    row = degen_bernoulli_row(6, 1, LAM)
    for n in range(7):
        assert x_coefficients(row.polynomial(n).substitute(lam=lam)) == expected[n]


def test_higher_order_matches_sympy():
    lam = F(1, 3)
    expected = sympy_degen_bernoulli(5, 2, lam)
    for n in range(6):
        assert x_coefficients(degen_bernoulli(n, 2, X, lam)) == expected[n]


def test_row_agrees_with_single():
    row = degen_bernoulli_row(6, 2)
    for n in range(7):
        assert row.polynomial(n) == degen_bernoulli(n, 2)
    assert degen_bernoulli_row(0, 3).polynomials() == [ONE]


def test_truncation_guard():
    with pytest.raises(TruncationError):
        degen_bernoulli(5, 1, order=3)
    with pytest.raises(TruncationError):
        degen_bernoulli_row(3, 1).polynomial(4)


def test_generating_function_reconstruction():
    order = 16
    k = 2
    cache = degen_bernoulli_row(order, k)
    direct = series_mul(series_pow(series_invert(quotient_series(order)), k), binomial_series(X, order))
    assert cache.as_series() == direct


@pytest.mark.parametrize("k1, k2", [(0, 1), (1, 1), (1, 2), (2, 2), (1, 3)])
def test_order_additivity(k1, k2):
    order = 10
    a = bernoulli_series(k1, order, X)
    b = bernoulli_series(k2, order, ONE * 0)
    assert series_mul(a, b) == bernoulli_series(k1 + k2, order, X)


def test_numeric_path_agrees():
    xv, lv = F(2, 7), F(-1, 4)
    for n in range(7):
        assert degen_bernoulli(n, 2, xv, lv) == bipoly_eval(degen_bernoulli(n, 2), xv, lv)
